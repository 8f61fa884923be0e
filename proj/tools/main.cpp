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

// CLI front end.  Everything below goes through the C API in ztilde/capi.h;
// no C++ core headers are included here.
//
// Exit codes: 0 = success (verifications: property holds), 1 = a verification
// ran to completion and the property fails, 2 = bad input (parse/validation
// errors, unknown flags, unreadable files).

#include "CLI11.hpp"
#include "ztilde/capi.h"

#include <cstdio>
#include <memory>
#include <string>
#include <vector>

namespace {

struct Freer {
    void operator()(char* p) const { zt_string_free(p); }
};
using CStr = std::unique_ptr<char, Freer>;

int input_error() {
    std::fprintf(stderr, "error: %s\n", zt_last_error());
    return 2;
}

void print_block(const char* text) {
    if (!text) return;
    std::fputs(text, stdout);
    size_t n = std::char_traits<char>::length(text);
    if (n > 0 && text[n - 1] != '\n') std::fputc('\n', stdout);
}

// Report first, then a '---' separator, then the payload (when there is one).
int emit(zt_status st, const CStr& report, const CStr& payload, int verdict) {
    if (st != ZT_OK) return input_error();
    print_block(report.get());
    if (payload) {
        std::fputs("---\n", stdout);
        print_block(payload.get());
    }
    return verdict ? 0 : 1;
}

struct TruncationOpt {
    int n = -1; // -1 = not given

    void attach(CLI::App* cmd) {
        cmd->add_option("--truncation", n,
                        "bound both |exponent| and denominator degree by N "
                        "(default: tightest bound containing the input)")
            ->check(CLI::NonNegativeNumber);
    }
    int use() const { return n >= 0 ? 1 : 0; }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact algebra for twisted Morse complexes, combinatorial propagators,\n"
                 "and colored trivalent graph sums"};
    app.set_version_flag("--version", ZTILDE_VERSION_STR);
    app.require_subcommand(1);
    int rc = 0;

    // ---- check ----------------------------------------------------------
    static std::string check_complex;
    auto* cmd_check = app.add_subcommand("check", "validate a complex and test acyclicity");
    cmd_check->add_option("complex", check_complex, "complex file")->required();
    cmd_check->callback([&] {
        CStr report;
        int verdict = 0;
        char* r = nullptr;
        zt_status st = zt_cmd_check(check_complex.c_str(), &r, &verdict);
        report.reset(r);
        rc = emit(st, report, CStr{}, verdict);
    });

    // ---- propagator -------------------------------------------------------
    static std::string prop_complex;
    auto* cmd_prop = app.add_subcommand("propagator", "solve dg + gd = 1 for an acyclic complex");
    cmd_prop->add_option("complex", prop_complex, "complex file")->required();
    cmd_prop->callback([&] {
        char* r = nullptr;
        char* p = nullptr;
        zt_status st = zt_cmd_propagator(prop_complex.c_str(), &r, &p);
        rc = emit(st, CStr{r}, CStr{p}, 1);
    });

    // ---- homology ---------------------------------------------------------
    static std::string hom_complex;
    auto* cmd_hom = app.add_subcommand("homology", "module presentation of the twisted homology");
    cmd_hom->add_option("complex", hom_complex, "complex file")->required();
    cmd_hom->callback([&] {
        char* r = nullptr;
        char* p = nullptr;
        zt_status st = zt_cmd_homology(hom_complex.c_str(), &r, &p);
        rc = emit(st, CStr{r}, CStr{p}, 1);
    });

    // ---- trace ------------------------------------------------------------
    static std::string tr_graph, tr_colors, tr_bindings;
    auto* cmd_trace =
        app.add_subcommand("trace", "trace a colored graph against bound complexes/propagators");
    cmd_trace->add_option("graph", tr_graph, "trivalent graph file")->required();
    cmd_trace->add_option("colors", tr_colors, "edge colors or weight file")->required();
    cmd_trace->add_option("bindings", tr_bindings, "slot bindings file")->required();
    cmd_trace->callback([&] {
        char* r = nullptr;
        char* p = nullptr;
        zt_status st = zt_cmd_trace(tr_graph.c_str(), tr_colors.c_str(), tr_bindings.c_str(), &r,
                                    &p);
        rc = emit(st, CStr{r}, CStr{p}, 1);
    });

    // ---- invariant ----------------------------------------------------------
    static std::vector<std::string> inv_inputs;
    static TruncationOpt inv_tr;
    auto* cmd_inv = app.add_subcommand(
        "invariant", "assemble the invariant from count tables and an anomaly file");
    cmd_inv->add_option("inputs", inv_inputs,
                        "count-table files (one per sign pattern), then the anomaly file last")
        ->required()
        ->expected(-1);
    inv_tr.attach(cmd_inv);
    cmd_inv->callback([&] {
        if (inv_inputs.size() < 2) {
            std::fprintf(stderr,
                         "error: invariant needs at least one count table and an anomaly file\n");
            rc = 2;
            return;
        }
        std::vector<const char*> counts;
        for (size_t i = 0; i + 1 < inv_inputs.size(); ++i)
            counts.push_back(inv_inputs[i].c_str());
        const std::string& anomaly = inv_inputs.back();
        char* r = nullptr;
        char* p = nullptr;
        zt_status st = zt_cmd_invariant(counts.data(), counts.size(), anomaly.c_str(),
                                        inv_tr.use(), inv_tr.n, inv_tr.n, &r, &p);
        rc = emit(st, CStr{r}, CStr{p}, 1);
    });

    // ---- reduce -------------------------------------------------------------
    static std::string red_sum;
    static TruncationOpt red_tr;
    auto* cmd_red = app.add_subcommand("reduce", "reduce a diagram sum modulo the relation span");
    cmd_red->add_option("sum", red_sum, "diagram-sum file")->required();
    red_tr.attach(cmd_red);
    cmd_red->callback([&] {
        char* r = nullptr;
        char* p = nullptr;
        zt_status st = zt_cmd_reduce(red_sum.c_str(), red_tr.use(), red_tr.n, red_tr.n, &r, &p);
        rc = emit(st, CStr{r}, CStr{p}, 1);
    });

    // ---- verify -------------------------------------------------------------
    auto* cmd_verify = app.add_subcommand("verify", "machine checks of the structural identities");
    cmd_verify->require_subcommand(1);

    static std::string oc_complex, oc_prop;
    auto* v_oc = cmd_verify->add_subcommand(
        "o-cycle", "boundary coefficients of the propagator one-chain sum to a cycle");
    v_oc->add_option("complex", oc_complex, "complex file")->required();
    v_oc->add_option("propagator", oc_prop, "degree-1 endomorphism file")->required();
    v_oc->callback([&] {
        char* r = nullptr;
        int verdict = 0;
        zt_status st = zt_cmd_verify_o_cycle(oc_complex.c_str(), oc_prop.c_str(), &r, &verdict);
        rc = emit(st, CStr{r}, CStr{}, verdict);
    });

    static std::string sp_graph, sp_colors, sp_bindings, sp_gen;
    static int sp_slot = 0, sp_sign = 0;
    auto* v_sp = cmd_verify->add_subcommand(
        "sp", "trace is unchanged under the basis rescaling of one bound slot");
    v_sp->add_option("graph", sp_graph, "trivalent graph file")->required();
    v_sp->add_option("colors", sp_colors, "edge colors or weight file")->required();
    v_sp->add_option("bindings", sp_bindings, "slot bindings file")->required();
    v_sp->add_option("--slot", sp_slot, "edge label whose bound pair is rescaled (1-based)")
        ->required();
    v_sp->add_option("--gen", sp_gen, "generator to rescale")->required();
    v_sp->add_option("--sign", sp_sign, "+1 or -1")->required();
    v_sp->callback([&] {
        char* r = nullptr;
        int verdict = 0;
        zt_status st = zt_cmd_verify_sp(sp_graph.c_str(), sp_colors.c_str(), sp_bindings.c_str(),
                                        sp_slot, sp_gen.c_str(), sp_sign, &r, &verdict);
        rc = emit(st, CStr{r}, CStr{}, verdict);
    });

    static std::string ca_table;
    auto* v_ca = cmd_verify->add_subcommand(
        "cancellation", "degree-zero contributions of a degenerate count table cancel");
    v_ca->add_option("table", ca_table, "degenerate count-table file (with slot bindings)")
        ->required();
    v_ca->callback([&] {
        char* r = nullptr;
        char* res = nullptr;
        int verdict = 0;
        zt_status st = zt_cmd_verify_cancellation(ca_table.c_str(), &r, &verdict, &res);
        rc = emit(st, CStr{r}, CStr{res}, verdict);
    });

    static std::string pi_table, pi_alt;
    static TruncationOpt pi_tr;
    auto* v_pi = cmd_verify->add_subcommand(
        "propagator-independence",
        "assembled sums for two propagator choices agree modulo relations");
    v_pi->add_option("table", pi_table, "count-table file (with slot bindings)")->required();
    v_pi->add_option("alt-bindings", pi_alt, "bindings with the same complexes, other propagators")
        ->required();
    pi_tr.attach(v_pi);
    v_pi->callback([&] {
        char* r = nullptr;
        char* res = nullptr;
        int verdict = 0;
        zt_status st = zt_cmd_verify_propagator_independence(
            pi_table.c_str(), pi_alt.c_str(), pi_tr.use(), pi_tr.n, pi_tr.n, &r, &verdict, &res);
        rc = emit(st, CStr{r}, CStr{res}, verdict);
    });

    static std::string hs_complex, hs_prop, hs_from, hs_to, hs_coeff;
    auto* v_hs = cmd_verify->add_subcommand(
        "handle-slide", "updated propagator identity and the exact commutator difference");
    v_hs->add_option("complex", hs_complex, "complex file")->required();
    v_hs->add_option("propagator", hs_prop, "degree-1 endomorphism file")->required();
    v_hs->add_option("--from", hs_from, "generator being slid")->required();
    v_hs->add_option("--to", hs_to, "generator of the same index it slides over")->required();
    v_hs->add_option("--coeff", hs_coeff, "slide coefficient, e.g. (t^2-1)/(1)")->required();
    v_hs->callback([&] {
        char* r = nullptr;
        int verdict = 0;
        zt_status st =
            zt_cmd_verify_handle_slide(hs_complex.c_str(), hs_prop.c_str(), hs_from.c_str(),
                                       hs_to.c_str(), hs_coeff.c_str(), &r, &verdict);
        rc = emit(st, CStr{r}, CStr{}, verdict);
    });

    // ---- gen ---------------------------------------------------------------
    auto* cmd_gen = app.add_subcommand("gen", "seeded generators for complexes and graph lists");
    cmd_gen->require_subcommand(1);

    static uint64_t gc_seed = 0;
    static std::vector<int> gc_sizes;
    static int gc_degree_bound = 1;
    auto* g_cx = cmd_gen->add_subcommand("complex",
                                         "random acyclic complex with a found propagator");
    g_cx->add_option("--seed", gc_seed, "RNG seed")->required();
    g_cx->add_option("--sizes", gc_sizes, "generator counts per degree, e.g. 2,3,3,2")
        ->required()
        ->delimiter(',');
    g_cx->add_option("--degree-bound", gc_degree_bound, "twisting budget per degree (default 1)")
        ->check(CLI::NonNegativeNumber);
    g_cx->callback([&] {
        if (gc_sizes.size() != 4) {
            std::fprintf(stderr, "error: --sizes needs exactly four counts, e.g. 2,3,3,2\n");
            rc = 2;
            return;
        }
        int sizes[4] = {gc_sizes[0], gc_sizes[1], gc_sizes[2], gc_sizes[3]};
        char* r = nullptr;
        char* ct = nullptr;
        char* pt = nullptr;
        zt_status st = zt_cmd_gen_complex(gc_seed, sizes, gc_degree_bound, &r, &ct, &pt);
        CStr report{r}, ctext{ct}, ptext{pt};
        if (st != ZT_OK) {
            rc = input_error();
            return;
        }
        print_block(report.get());
        std::fputs("---\n", stdout);
        print_block(ctext.get());
        std::fputs("---\n", stdout);
        print_block(ptext.get());
        rc = 0;
    });

    static std::string gr_complex, gr_prop;
    auto* g_rev = cmd_gen->add_subcommand(
        "reversed", "reversed-flow pair (for the '-' orientation slots of an invariant run)");
    g_rev->add_option("complex", gr_complex, "complex file")->required();
    g_rev->add_option("propagator", gr_prop, "degree-1 endomorphism file")->required();
    g_rev->callback([&] {
        char* r = nullptr;
        char* ct = nullptr;
        char* pt = nullptr;
        zt_status st = zt_cmd_gen_reversed(gr_complex.c_str(), gr_prop.c_str(), &r, &ct, &pt);
        CStr report{r}, ctext{ct}, ptext{pt};
        if (st != ZT_OK) {
            rc = input_error();
            return;
        }
        print_block(report.get());
        std::fputs("---\n", stdout);
        print_block(ctext.get());
        std::fputs("---\n", stdout);
        print_block(ptext.get());
        rc = 0;
    });

    static int gg_k = 1;
    auto* g_gr = cmd_gen->add_subcommand("graphs", "all trivalent graph classes for a given k");
    g_gr->add_option("--k", gg_k, "half the vertex count (1..3)")->required();
    g_gr->callback([&] {
        char* r = nullptr;
        char* p = nullptr;
        zt_status st = zt_cmd_gen_graphs(gg_k, &r, &p);
        rc = emit(st, CStr{r}, CStr{p}, 1);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    return rc;
}
