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
#include "ztilde/capi.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ztilde/cgraph.hpp"
#include "ztilde/complex.hpp"
#include "ztilde/diagram.hpp"
#include "ztilde/errors.hpp"
#include "ztilde/io.hpp"
#include "ztilde/testkit.hpp"
#include "ztilde/trace.hpp"

using namespace zt;

namespace {

thread_local std::string t_last_error;

char* dup_string(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (p) std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

zt_status fail(zt_status st, const std::string& msg) {
    t_last_error = msg;
    return st;
}

template <class F>
zt_status guarded(F&& body) {
    try {
        return body();
    } catch (const ParseError& e) {
        return fail(ZT_EPARSE, e.what());
    } catch (const NotAcyclicError& e) {
        return fail(ZT_ENOTACYCLIC, e.what());
    } catch (const NoSolutionError& e) {
        return fail(ZT_ENOSOLUTION, e.what());
    } catch (const IoError& e) {
        return fail(ZT_EIO, e.what());
    } catch (const ValidationError& e) {
        return fail(ZT_EVALIDATE, e.what());
    } catch (const Error& e) {
        return fail(ZT_EINTERNAL, e.what());
    } catch (const std::exception& e) {
        return fail(ZT_EINTERNAL, e.what());
    } catch (...) {
        return fail(ZT_EINTERNAL, "unknown error");
    }
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    }
};

bool verbose() {
    const char* v = std::getenv("ZTILDE_VERBOSE");
    return v && *v && std::strcmp(v, "0") != 0;
}

void set_out(char** slot, const std::string& s) {
    if (slot) *slot = dup_string(s);
}

void set_int(int* slot, int v) {
    if (slot) *slot = v;
}

std::string load_input(RunReport& rep, const std::string& label, const std::string& path) {
    std::string text = read_file(path);
    rep.add(label, path + " fnv1a=" + fnv1a_hex(text));
    return text;
}

void finish_report(RunReport& rep, const Timer& tm, char** out) {
    rep.add("timing_ms", std::to_string(tm.ms()));
    set_out(out, rep.str());
}

TwistedComplex load_valid_complex(RunReport& rep, const std::string& label,
                                  const std::string& path) {
    TwistedComplex c = parse_complex(load_input(rep, label, path));
    auto vr = validate_complex(c);
    if (!vr.ok) throw ValidationError("complex '" + path + "': " + vr.message);
    return c;
}

std::string truncation_label(const Truncation& tr) {
    return "exp<=" + std::to_string(tr.max_abs_exp) + " den<=" + std::to_string(tr.max_den_deg);
}

Truncation checked_truncation(int max_abs_exp, int max_den_deg) {
    if (max_abs_exp < 0 || max_den_deg < 0)
        throw ValidationError("truncation bounds must be nonnegative");
    return Truncation{max_abs_exp, max_den_deg};
}

} // namespace

struct zt_complex {
    TwistedComplex v;
};
struct zt_endo {
    Endo v;
};
struct zt_diagram_sum {
    DiagramSum v;
};

extern "C" {

const char* zt_last_error(void) { return t_last_error.c_str(); }

void zt_string_free(char* s) { std::free(s); }

/* ---- objects ------------------------------------------------------------ */

zt_status zt_complex_parse(const char* text, zt_complex** out) {
    if (!text || !out) return fail(ZT_EARG, "zt_complex_parse: null argument");
    return guarded([&] {
        *out = new zt_complex{parse_complex(text)};
        return ZT_OK;
    });
}

zt_status zt_complex_serialize(const zt_complex* c, char** out) {
    if (!c || !out) return fail(ZT_EARG, "zt_complex_serialize: null argument");
    return guarded([&] {
        *out = dup_string(complex_text(c->v));
        return ZT_OK;
    });
}

void zt_complex_free(zt_complex* c) { delete c; }

zt_status zt_complex_validate(const zt_complex* c) {
    if (!c) return fail(ZT_EARG, "zt_complex_validate: null argument");
    return guarded([&] {
        auto vr = validate_complex(c->v);
        if (!vr.ok) return fail(ZT_EVALIDATE, vr.message);
        return ZT_OK;
    });
}

zt_status zt_complex_check_acyclic(const zt_complex* c, int* acyclic) {
    if (!c || !acyclic) return fail(ZT_EARG, "zt_complex_check_acyclic: null argument");
    return guarded([&] {
        auto vr = validate_complex(c->v);
        if (!vr.ok) return fail(ZT_EVALIDATE, vr.message);
        *acyclic = check_acyclic(c->v) ? 1 : 0;
        return ZT_OK;
    });
}

zt_status zt_complex_find_propagator(const zt_complex* c, zt_endo** out) {
    if (!c || !out) return fail(ZT_EARG, "zt_complex_find_propagator: null argument");
    return guarded([&] {
        auto vr = validate_complex(c->v);
        if (!vr.ok) return fail(ZT_EVALIDATE, vr.message);
        *out = new zt_endo{find_propagator(c->v)};
        return ZT_OK;
    });
}

zt_status zt_endo_parse(const char* text, const zt_complex* c, zt_endo** out) {
    if (!text || !c || !out) return fail(ZT_EARG, "zt_endo_parse: null argument");
    return guarded([&] {
        *out = new zt_endo{parse_endo(text, c->v)};
        return ZT_OK;
    });
}

zt_status zt_endo_serialize(const zt_endo* e, const zt_complex* c, char** out) {
    if (!e || !c || !out) return fail(ZT_EARG, "zt_endo_serialize: null argument");
    return guarded([&] {
        *out = dup_string(endo_text(e->v, c->v));
        return ZT_OK;
    });
}

void zt_endo_free(zt_endo* e) { delete e; }

zt_status zt_endo_is_propagator(const zt_complex* c, const zt_endo* e, int* ok) {
    if (!c || !e || !ok) return fail(ZT_EARG, "zt_endo_is_propagator: null argument");
    return guarded([&] {
        *ok = is_propagator(c->v, e->v) ? 1 : 0;
        return ZT_OK;
    });
}

zt_status zt_diagram_sum_parse(const char* text, zt_diagram_sum** out) {
    if (!text || !out) return fail(ZT_EARG, "zt_diagram_sum_parse: null argument");
    return guarded([&] {
        *out = new zt_diagram_sum{parse_diagram_sum_file(text)};
        return ZT_OK;
    });
}

zt_status zt_diagram_sum_serialize(const zt_diagram_sum* d, char** out) {
    if (!d || !out) return fail(ZT_EARG, "zt_diagram_sum_serialize: null argument");
    return guarded([&] {
        *out = dup_string(d->v.str());
        return ZT_OK;
    });
}

void zt_diagram_sum_free(zt_diagram_sum* d) { delete d; }

zt_status zt_diagram_sum_equal(const zt_diagram_sum* a, const zt_diagram_sum* b, int* eq) {
    if (!a || !b || !eq) return fail(ZT_EARG, "zt_diagram_sum_equal: null argument");
    *eq = (a->v == b->v) ? 1 : 0;
    return ZT_OK;
}

zt_status zt_diagram_sum_reduce(const zt_diagram_sum* d, int max_abs_exp, int max_den_deg,
                                zt_diagram_sum** out) {
    if (!d || !out) return fail(ZT_EARG, "zt_diagram_sum_reduce: null argument");
    return guarded([&] {
        *out = new zt_diagram_sum{
            reduce_modulo_ihx(d->v, checked_truncation(max_abs_exp, max_den_deg))};
        return ZT_OK;
    });
}

/* ---- command pipelines --------------------------------------------------- */

zt_status zt_cmd_check(const char* complex_path, char** report, int* verdict) {
    if (!complex_path) return fail(ZT_EARG, "zt_cmd_check: null path");
    return guarded([&] {
        Timer tm;
        RunReport rep;
        rep.add("operation", "check");
        TwistedComplex c = parse_complex(load_input(rep, "complex", complex_path));
        auto vr = validate_complex(c);
        int ok = 0;
        if (!vr.ok) {
            rep.add("valid", "false");
            rep.add("reason", vr.message);
        } else {
            rep.add("valid", "true");
            bool ac = check_acyclic(c);
            rep.add("acyclic", ac ? "true" : "false");
            ok = ac ? 1 : 0;
        }
        if (verbose())
            for (int i = 0; i < 4; ++i)
                rep.add("dim[" + std::to_string(i) + "]", std::to_string(c.dim(i)));
        set_int(verdict, ok);
        finish_report(rep, tm, report);
        return ZT_OK;
    });
}

zt_status zt_cmd_propagator(const char* complex_path, char** report, char** propagator_text) {
    if (!complex_path) return fail(ZT_EARG, "zt_cmd_propagator: null path");
    return guarded([&] {
        Timer tm;
        RunReport rep;
        rep.add("operation", "propagator");
        TwistedComplex c = load_valid_complex(rep, "complex", complex_path);
        Propagator g = find_propagator(c);
        std::string text = endo_text(g, c);
        rep.add("result", "found");
        rep.add("output_fnv1a", fnv1a_hex(text));
        finish_report(rep, tm, report);
        set_out(propagator_text, text);
        return ZT_OK;
    });
}

zt_status zt_cmd_homology(const char* complex_path, char** report, char** presentation_text) {
    if (!complex_path) return fail(ZT_EARG, "zt_cmd_homology: null path");
    return guarded([&] {
        Timer tm;
        RunReport rep;
        rep.add("operation", "homology");
        TwistedComplex c = load_valid_complex(rep, "complex", complex_path);
        HomologySummary hs = homology_over_lambda(c);
        std::string text;
        bool trivial = true;
        for (int i = 0; i < 4; ++i) {
            const auto& piece = hs.h[i];
            text += "H[" + std::to_string(i) + "]: free_rank=" + std::to_string(piece.free_rank);
            if (!piece.torsion.empty()) {
                text += " torsion=";
                for (size_t j = 0; j < piece.torsion.size(); ++j)
                    text += std::string(j ? ", " : "") + "(" + piece.torsion[j].str() + ")";
            }
            text += "\n";
            if (piece.free_rank != 0 || !piece.torsion.empty()) trivial = false;
        }
        rep.add("trivial", trivial ? "true" : "false");
        finish_report(rep, tm, report);
        set_out(presentation_text, text);
        return ZT_OK;
    });
}

namespace {

struct TraceInputs {
    ParsedGraph pg;
    ColorSpec spec;
    LoadedSlots slots;
};

TraceInputs load_trace_inputs(RunReport& rep, const char* graph_path, const char* colors_path,
                              const char* bindings_path) {
    TraceInputs in;
    in.pg = parse_graph_text(load_input(rep, "graph", graph_path));
    if (!in.pg.colors.empty())
        throw ValidationError("graph file already carries colorings; supply them separately");
    in.spec = parse_colors(load_input(rep, "colors", colors_path), in.pg.graph.ne());
    SlotBindings b =
        parse_bindings(load_input(rep, "bindings", bindings_path), dir_of(bindings_path));
    if (b.empty()) throw ValidationError("bindings file binds no slots");
    in.slots = load_slots(b);
    return in;
}

} // namespace

zt_status zt_cmd_trace(const char* graph_path, const char* colors_path, const char* bindings_path,
                       char** report, char** sum_text) {
    if (!graph_path || !colors_path || !bindings_path)
        return fail(ZT_EARG, "zt_cmd_trace: null path");
    return guarded([&] {
        Timer tm;
        RunReport rep;
        rep.add("operation", "trace");
        TraceInputs in = load_trace_inputs(rep, graph_path, colors_path, bindings_path);
        rep.add("k", std::to_string(in.pg.graph.k));
        if (verbose()) rep.add("edges", std::to_string(in.pg.graph.ne()));
        DiagramSum z =
            in.spec.is_weight
                ? trace(in.pg.graph, in.spec.weight, in.slots.complexes, in.slots.propagators)
                : trace_colored(in.pg.graph, in.spec.colors, Rational(1), in.slots.complexes,
                                in.slots.propagators);
        rep.add("terms", std::to_string(z.size()));
        finish_report(rep, tm, report);
        set_out(sum_text, z.str());
        return ZT_OK;
    });
}

zt_status zt_cmd_invariant(const char* const* count_paths, size_t n_count_paths,
                           const char* anomaly_path, int use_truncation, int max_abs_exp,
                           int max_den_deg, char** report, char** sum_text) {
    if (!count_paths || n_count_paths == 0 || !anomaly_path)
        return fail(ZT_EARG, "zt_cmd_invariant: null input");
    for (size_t i = 0; i < n_count_paths; ++i)
        if (!count_paths[i]) return fail(ZT_EARG, "zt_cmd_invariant: null count-table path");
    return guarded([&] {
        Timer tm;
        RunReport rep;
        rep.add("operation", "invariant");
        AnomalyData a = parse_anomaly(load_input(rep, "anomaly", anomaly_path));
        std::map<std::string, PatternData> pats;
        int k = 0;
        for (size_t i = 0; i < n_count_paths; ++i) {
            const std::string path = count_paths[i];
            CountTableFile ctf = parse_count_table(
                load_input(rep, "counts[" + std::to_string(i) + "]", path), dir_of(path));
            if (ctf.table.pattern.empty())
                throw ValidationError("count table '" + path + "' declares no sign pattern");
            if (ctf.bindings.empty())
                throw ValidationError("count table '" + path + "' has no slot bindings");
            if (pats.count(ctf.table.pattern))
                throw ValidationError("duplicate sign pattern '" + ctf.table.pattern + "'");
            if (verbose())
                rep.add("entries[" + ctf.table.pattern + "]",
                        std::to_string(ctf.table.entries.size()));
            LoadedSlots ls = load_slots(ctf.bindings);
            k = ctf.table.k;
            std::string pattern = ctf.table.pattern;
            pats.emplace(std::move(pattern),
                         PatternData{std::move(ls.complexes), std::move(ls.propagators),
                                     std::move(ctf.table), a});
        }
        rep.add("k", std::to_string(k));
        rep.add("patterns", std::to_string(pats.size()));
        rep.add("sign_W", std::to_string(a.sign_w));
        if (a.mu_defaulted)
            rep.add("warning",
                    "mu_k was not supplied and defaults to zero; the mu_k correction is missing "
                    "from this result");
        DiagramSum z = sum_over_orientations(pats);
        if (use_truncation) {
            Truncation tr = checked_truncation(max_abs_exp, max_den_deg);
            rep.add("truncation", truncation_label(tr));
            z = reduce_modulo_ihx(z, tr);
        } else {
            rep.add("truncation", "none");
        }
        rep.add("terms", std::to_string(z.size()));
        finish_report(rep, tm, report);
        set_out(sum_text, z.str());
        return ZT_OK;
    });
}

zt_status zt_cmd_reduce(const char* sum_path, int use_truncation, int max_abs_exp, int max_den_deg,
                        char** report, char** sum_text) {
    if (!sum_path) return fail(ZT_EARG, "zt_cmd_reduce: null path");
    return guarded([&] {
        Timer tm;
        RunReport rep;
        rep.add("operation", "reduce");
        DiagramSum d = parse_diagram_sum_file(load_input(rep, "sum", sum_path));
        Truncation tr;
        if (use_truncation) {
            tr = checked_truncation(max_abs_exp, max_den_deg);
            rep.add("truncation", truncation_label(tr));
        } else {
            tr = containing_truncation(d);
            rep.add("truncation", "auto " + truncation_label(tr));
        }
        DiagramSum r = reduce_modulo_ihx(d, tr);
        rep.add("terms", std::to_string(r.size()));
        finish_report(rep, tm, report);
        set_out(sum_text, r.str());
        return ZT_OK;
    });
}

zt_status zt_cmd_verify_o_cycle(const char* complex_path, const char* propagator_path,
                                char** report, int* verdict) {
    if (!complex_path || !propagator_path) return fail(ZT_EARG, "zt_cmd_verify_o_cycle: null path");
    return guarded([&] {
        Timer tm;
        RunReport rep;
        rep.add("operation", "verify o-cycle");
        TwistedComplex c = load_valid_complex(rep, "complex", complex_path);
        Endo g = parse_endo(load_input(rep, "propagator", propagator_path), c);
        if (g.degree != 1)
            throw ValidationError("the supplied endomorphism has degree " +
                                  std::to_string(g.degree) + ", need degree 1");
        bool ok = verify_O_cycle(c, g);
        rep.add("one_cycle", ok ? "true" : "false");
        set_int(verdict, ok ? 1 : 0);
        finish_report(rep, tm, report);
        return ZT_OK;
    });
}

zt_status zt_cmd_verify_sp(const char* graph_path, const char* colors_path,
                           const char* bindings_path, int slot, const char* generator, int sign,
                           char** report, int* verdict) {
    if (!graph_path || !colors_path || !bindings_path || !generator)
        return fail(ZT_EARG, "zt_cmd_verify_sp: null argument");
    if (sign != 1 && sign != -1) return fail(ZT_EARG, "zt_cmd_verify_sp: sign must be +1 or -1");
    return guarded([&] {
        Timer tm;
        RunReport rep;
        rep.add("operation", "verify sp");
        TraceInputs in = load_trace_inputs(rep, graph_path, colors_path, bindings_path);
        const CGraph& g = in.pg.graph;
        const int ne = g.ne();
        if (slot < 1 || slot > ne)
            throw ValidationError("slot " + std::to_string(slot) + " out of range 1.." +
                                  std::to_string(ne));
        rep.add("slot", std::to_string(slot));
        rep.add("generator", generator);
        rep.add("sign", std::to_string(sign));

        const bool broadcast = in.slots.complexes.size() == 1;
        const size_t bi = broadcast ? 0 : static_cast<size_t>(slot - 1);
        auto [c2, g2] = conjugate_by_sp(in.slots.complexes[bi], in.slots.propagators[bi],
                                        generator, sign);
        std::vector<TwistedComplex> cs2 = in.slots.complexes;
        std::vector<Propagator> gs2 = in.slots.propagators;
        cs2[bi] = std::move(c2);
        gs2[bi] = std::move(g2);
        auto affected = [&](int i) { return broadcast || i == slot - 1; };

        DiagramSum lhs, rhs;
        if (in.spec.is_weight) {
            MultiWeight w2 = in.spec.weight;
            for (int i = 0; i < ne; ++i)
                if (affected(i)) w2 = sp_weight_action(g, w2, i, generator, sign);
            lhs = trace(g, in.spec.weight, in.slots.complexes, in.slots.propagators);
            rhs = trace(g, w2, cs2, gs2);
        } else {
            std::vector<RatFn> cols2 = in.spec.colors;
            for (int i = 0; i < ne; ++i) {
                if (!affected(i) || !g.edges[i].separated) continue;
                int delta = 0;
                if (g.edges[i].out_gen == generator) delta += sign;
                if (g.edges[i].in_gen == generator) delta -= sign;
                if (delta != 0) cols2[i] = cols2[i].shifted(delta);
            }
            lhs = trace_colored(g, in.spec.colors, Rational(1), in.slots.complexes,
                                in.slots.propagators);
            rhs = trace_colored(g, cols2, Rational(1), cs2, gs2);
        }
        bool ok = (lhs == rhs);
        rep.add("agree", ok ? "true" : "false");
        set_int(verdict, ok ? 1 : 0);
        finish_report(rep, tm, report);
        return ZT_OK;
    });
}

zt_status zt_cmd_verify_cancellation(const char* table_path, char** report, int* verdict,
                                     char** residual_text) {
    if (!table_path) return fail(ZT_EARG, "zt_cmd_verify_cancellation: null path");
    return guarded([&] {
        Timer tm;
        RunReport rep;
        rep.add("operation", "verify cancellation");
        CountTableFile ctf =
            parse_count_table(load_input(rep, "table", table_path), dir_of(table_path));
        if (ctf.bindings.empty())
            throw ValidationError("count table '" + std::string(table_path) +
                                  "' has no slot bindings");
        LoadedSlots ls = load_slots(ctf.bindings);
        rep.add("entries", std::to_string(ctf.table.entries.size()));
        DiagramSum residual;
        bool ok = verify_degree_zero_cancellation(ctf.table, ls.complexes, ls.propagators,
                                                  &residual);
        rep.add("cancels", ok ? "true" : "false");
        if (!ok) rep.add("residual_terms", std::to_string(residual.size()));
        set_int(verdict, ok ? 1 : 0);
        finish_report(rep, tm, report);
        set_out(residual_text, residual.str());
        return ZT_OK;
    });
}

zt_status zt_cmd_verify_propagator_independence(const char* table_path,
                                                const char* alt_bindings_path, int use_truncation,
                                                int max_abs_exp, int max_den_deg, char** report,
                                                int* verdict, char** residual_text) {
    if (!table_path || !alt_bindings_path)
        return fail(ZT_EARG, "zt_cmd_verify_propagator_independence: null path");
    return guarded([&] {
        Timer tm;
        RunReport rep;
        rep.add("operation", "verify propagator-independence");
        CountTableFile ctf =
            parse_count_table(load_input(rep, "table", table_path), dir_of(table_path));
        if (ctf.bindings.empty())
            throw ValidationError("count table '" + std::string(table_path) +
                                  "' has no slot bindings");
        SlotBindings alt = parse_bindings(load_input(rep, "alt_bindings", alt_bindings_path),
                                          dir_of(alt_bindings_path));
        if (alt.empty()) throw ValidationError("alternate bindings file binds no slots");
        LoadedSlots la = load_slots(ctf.bindings);
        LoadedSlots lb = load_slots(alt);
        if (la.complexes.size() != lb.complexes.size())
            throw ValidationError("alternate bindings bind " + std::to_string(lb.complexes.size()) +
                                  " slots, the table binds " + std::to_string(la.complexes.size()));
        for (size_t i = 0; i < la.complexes.size(); ++i)
            if (!(la.complexes[i] == lb.complexes[i]))
                throw ValidationError("alternate bindings must reference the same complexes "
                                      "(slot " +
                                      std::to_string(i + 1) + " differs)");
        Truncation tr;
        if (use_truncation) {
            tr = checked_truncation(max_abs_exp, max_den_deg);
            rep.add("truncation", truncation_label(tr));
        } else {
            DiagramSum za = assemble_z(ctf.table, la.complexes, la.propagators);
            DiagramSum zb = assemble_z(ctf.table, lb.complexes, lb.propagators);
            tr = containing_truncation(za - zb);
            rep.add("truncation", "auto " + truncation_label(tr));
        }
        DiagramSum residual;
        bool ok = verify_propagator_independence(ctf.table, la.complexes, la.propagators,
                                                 lb.propagators, tr, &residual);
        rep.add("independent", ok ? "true" : "false");
        if (!ok) rep.add("residual_terms", std::to_string(residual.size()));
        set_int(verdict, ok ? 1 : 0);
        finish_report(rep, tm, report);
        set_out(residual_text, residual.str());
        return ZT_OK;
    });
}

zt_status zt_cmd_verify_handle_slide(const char* complex_path, const char* propagator_path,
                                     const char* from_gen, const char* to_gen, const char* coeff,
                                     char** report, int* verdict) {
    if (!complex_path || !propagator_path || !from_gen || !to_gen || !coeff)
        return fail(ZT_EARG, "zt_cmd_verify_handle_slide: null argument");
    return guarded([&] {
        Timer tm;
        RunReport rep;
        rep.add("operation", "verify handle-slide");
        TwistedComplex c = load_valid_complex(rep, "complex", complex_path);
        Endo g = parse_endo(load_input(rep, "propagator", propagator_path), c);
        if (g.degree != 1)
            throw ValidationError("the supplied endomorphism has degree " +
                                  std::to_string(g.degree) + ", need degree 1");
        RatFn co = RatFn::parse(std::string_view(coeff), 0);
        rep.add("slide", std::string(from_gen) + " -> " + to_gen + " by " + co.str());
        Endo h = elementary_slide(c, from_gen, to_gen, co);
        auto [c2, gg] = handle_slide_update(c, g, h);
        bool prop_ok = is_propagator(c2, gg);
        bool comm_ok = true;
        for (int i = 0; i < 4 && comm_ok; ++i) {
            Matrix<RatFn> hg = (i < 3) ? g.m[i] * h.m[i + 1] : Matrix<RatFn>(c.dim(3), 0);
            Matrix<RatFn> gh = h.m[i] * g.m[i];
            comm_ok = (gg.m[i] - g.m[i]) == (hg - gh);
        }
        rep.add("updated_propagator", prop_ok ? "true" : "false");
        rep.add("commutator_identity", comm_ok ? "true" : "false");
        bool ok = prop_ok && comm_ok;
        set_int(verdict, ok ? 1 : 0);
        finish_report(rep, tm, report);
        return ZT_OK;
    });
}

zt_status zt_cmd_gen_complex(uint64_t seed, const int sizes[4], int degree_bound, char** report,
                             char** complex_text_out, char** propagator_text_out) {
    if (!sizes) return fail(ZT_EARG, "zt_cmd_gen_complex: null sizes");
    return guarded([&] {
        Timer tm;
        RunReport rep;
        rep.add("operation", "gen complex");
        std::array<int, 4> sz{sizes[0], sizes[1], sizes[2], sizes[3]};
        rep.add("seed", std::to_string(seed));
        rep.add("sizes", std::to_string(sz[0]) + "," + std::to_string(sz[1]) + "," +
                             std::to_string(sz[2]) + "," + std::to_string(sz[3]));
        rep.add("degree_bound", std::to_string(degree_bound));
        auto [c, g] = random_acyclic_complex(seed, sz, degree_bound);
        std::string ct = complex_text(c);
        std::string gt = endo_text(g, c);
        rep.add("complex_fnv1a", fnv1a_hex(ct));
        rep.add("propagator_fnv1a", fnv1a_hex(gt));
        finish_report(rep, tm, report);
        set_out(complex_text_out, ct);
        set_out(propagator_text_out, gt);
        return ZT_OK;
    });
}

zt_status zt_cmd_gen_reversed(const char* complex_path, const char* propagator_path, char** report,
                              char** complex_text_out, char** propagator_text_out) {
    if (!complex_path || !propagator_path) return fail(ZT_EARG, "zt_cmd_gen_reversed: null path");
    return guarded([&] {
        Timer tm;
        RunReport rep;
        rep.add("operation", "gen reversed");
        TwistedComplex c = load_valid_complex(rep, "complex", complex_path);
        Endo g = parse_endo(load_input(rep, "propagator", propagator_path), c);
        if (g.degree != 1)
            throw ValidationError("the supplied endomorphism has degree " +
                                  std::to_string(g.degree) + ", need degree 1");
        auto [rc, rg] = reverse_complex(c, g);
        std::string ct = complex_text(rc);
        std::string gt = endo_text(rg, rc);
        rep.add("complex_fnv1a", fnv1a_hex(ct));
        rep.add("propagator_fnv1a", fnv1a_hex(gt));
        finish_report(rep, tm, report);
        set_out(complex_text_out, ct);
        set_out(propagator_text_out, gt);
        return ZT_OK;
    });
}

zt_status zt_cmd_gen_graphs(int k, char** report, char** graphs_text) {
    return guarded([&] {
        Timer tm;
        RunReport rep;
        rep.add("operation", "gen graphs");
        rep.add("k", std::to_string(k));
        std::vector<CGraph> graphs = enumerate_trivalent_graphs(k);
        rep.add("classes", std::to_string(graphs.size()));
        finish_report(rep, tm, report);
        set_out(graphs_text, graph_list_text(graphs));
        return ZT_OK;
    });
}

} /* extern "C" */
