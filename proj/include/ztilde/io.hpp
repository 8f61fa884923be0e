/*
   Copyright 2026 The ztilde authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/
#ifndef ZTILDE_IO_HPP
#define ZTILDE_IO_HPP

#include <string>
#include <utility>
#include <vector>

#include "ztilde/cgraph.hpp"
#include "ztilde/complex.hpp"
#include "ztilde/diagram.hpp"
#include "ztilde/trace.hpp"

namespace zt {

/* whole-file text I/O; throws IoError */
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

/* FNV-1a 64-bit digest as 16 hex chars; used to fingerprint inputs in reports */
std::string fnv1a_hex(std::string_view text);

/* join a path found inside a file with that file's directory; absolute paths
 * and empty/"." bases pass through */
std::string join_path(const std::string& base_dir, const std::string& path);
std::string dir_of(const std::string& path);

/* Complex file: `generators[i]: a, b, ...` sections for i = 0..3 (all
 * generator sections precede all matrix sections), then `boundary[i]:`
 * blocks for i = 1..3 whose rows are indexed by the target (index i-1)
 * generators and whose columns by the source (index i) generators, entries
 * comma-separated Laurent polynomials.  Blocks with an empty side are
 * omitted and read back as zero. */
TwistedComplex parse_complex(const std::string& text);
std::string complex_text(const TwistedComplex& c);

/* Endomorphism file: `degree: <int>`, the generator sections of the
 * underlying complex (cross-checked), then `g[i]:` blocks, rows indexed by
 * the target (index i+degree) generators, entries comma-separated rational
 * functions. */
Endo parse_endo(const std::string& text, const TwistedComplex& c);
std::string endo_text(const Endo& e, const TwistedComplex& c);

/* Slot bindings: `slot <n>: complex=<path> propagator=<path>` lines
 * (1-based, covering 1..3k), or a single `slot *: ...` broadcast line kept
 * as size-1 vectors.  Paths are joined with base_dir at parse time. */
struct SlotBindings {
    std::vector<std::string> complex_paths;
    std::vector<std::string> propagator_paths;

    bool empty() const { return complex_paths.empty(); }
    bool operator==(const SlotBindings& o) const {
        return complex_paths == o.complex_paths && propagator_paths == o.propagator_paths;
    }
};

SlotBindings parse_bindings(const std::string& text, const std::string& base_dir);
std::string bindings_text(const SlotBindings& b);

/* Count-table file: `k: <int>`, optional `pattern: <+/- string of length
 * 3k>`, optional slot binding lines, then entries
 *     count {            or   count @<graph-file>: <weight>
 *     <graph lines>
 *     }: <weight>
 * with weights over t1..t_{3k}.  Serialization always inlines graphs. */
struct CountTableFile {
    FlowCountTable table;
    SlotBindings bindings;

    bool operator==(const CountTableFile& o) const {
        return table == o.table && bindings == o.bindings;
    }
};

CountTableFile parse_count_table(const std::string& text, const std::string& base_dir);
std::string count_table_text(const CountTableFile& f);

/* Anomaly file: `z_anomaly:` block, optional `mu_k:` block (absent means
 * defaulted to zero, which downstream reports flag), `sign_W: <int>`. */
AnomalyData parse_anomaly(const std::string& text);
std::string anomaly_text(const AnomalyData& a);

/* Edge colorings: either `color <label>: <rational function>` lines covering
 * every edge label once, or a single `weight: <multi-weight>` line. */
struct ColorSpec {
    bool is_weight = false;
    std::vector<RatFn> colors;
    MultiWeight weight;

    bool operator==(const ColorSpec& o) const {
        return is_weight == o.is_weight && colors == o.colors && weight == o.weight;
    }
};

ColorSpec parse_colors(const std::string& text, int ne);
std::string colors_text(const ColorSpec& cs);

/* DiagramSum files are DiagramSum::str text, optionally preceded by a
 * metadata block ended by a line containing exactly `---`. */
DiagramSum parse_diagram_sum_file(const std::string& text);

/* Several graphs in one file, each block starting at its `k:` line. */
std::vector<ParsedGraph> parse_graph_list(const std::string& text);
std::string graph_list_text(const std::vector<CGraph>& graphs);

/* Ordered key/value lines emitted before command payloads. */
struct RunReport {
    std::vector<std::pair<std::string, std::string>> fields;

    void add(std::string key, std::string value) {
        fields.emplace_back(std::move(key), std::move(value));
    }
    std::string str() const;
};

/* Load every complex/propagator referenced by a binding set (broadcast
 * bindings load once). */
struct LoadedSlots {
    std::vector<TwistedComplex> complexes;
    std::vector<Propagator> propagators;
};

LoadedSlots load_slots(const SlotBindings& b);

} // namespace zt

#endif
