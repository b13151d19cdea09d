/*
   Copyright 2026 ffcircle developers

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

// Command-line front end. Talks to the core exclusively through the shared
// library's C interface.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ffcircle/ffcircle.h"

namespace {

int report_error(ffc_status status) {
    std::cerr << "error (" << ffc_status_name(status) << "): " << ffc_last_error() << std::endl;
    return 1;
}

int emit(ffc_status status, char* text) {
    if (status != FFC_OK) return report_error(status);
    std::cout << text;
    ffc_string_free(text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact F_q[T] arithmetic and circle-method experiments"};
    app.set_version_flag("--version", std::string(ffc_version()));
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    std::uint64_t cap = 10'000'000;
    std::string output = "json";
    app.add_option("--seed", seed, "seed for every randomized draw")->capture_default_str();
    app.add_option("--cap", cap, "enumeration cap (items)")->capture_default_str();
    app.add_option("--output", output, "report format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    // verify
    auto* verify = app.add_subcommand("verify", "run the identity and property suites");
    std::string level = "quick";
    verify->add_option("--level", level, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}))
        ->capture_default_str();

    // experiment
    auto* experiment = app.add_subcommand("experiment", "full desk-scale run from a config file");
    std::string config_path;
    experiment->add_option("--config", config_path, "flat key = value config file")->required();

    // approx
    auto* approx = app.add_subcommand("approx", "Dirichlet approximation of a rational point");
    std::string approx_field = "3", xi, convention = "floor";
    std::int64_t approx_n = 0;
    approx->add_option("--q", approx_field, "field spec")->capture_default_str();
    approx->add_option("--xi", xi, "point U/V in polynomial text form")->required();
    approx->add_option("--n", approx_n, "window parameter")->required();
    approx->add_option("--convention", convention, "boundary convention: floor or strict")
        ->check(CLI::IsMember({"floor", "strict"}))
        ->capture_default_str();

    // count-classes
    auto* classes = app.add_subcommand("count-classes", "irreducibles per residue class");
    classes->set_help_flag("--help", "print help");  // frees -h/--h for the modulus
    std::string cls_field = "3", cls_h = "1";
    std::int64_t cls_n = 0, cls_ell = 0;
    classes->add_option("--q", cls_field, "field spec")->capture_default_str();
    classes->add_option("--n", cls_n, "irreducible degree")->required();
    classes->add_option("--ell", cls_ell, "leading coefficient count")->capture_default_str();
    classes->add_option("--h", cls_h, "modulus polynomial")->capture_default_str();

    // bounds
    auto* bounds = app.add_subcommand("bounds", "bound-lemma checkers over a grid");
    std::string lemma, grid = "default";
    bounds->add_option("--lemma", lemma, "va03, irredsum or fsmain")
        ->check(CLI::IsMember({"va03", "irredsum", "fsmain"}))
        ->required();
    bounds->add_option("--grid", grid, "grid spec, e.g. \"q=2,3;k=1:3\"")->capture_default_str();

    // correlate
    auto* correlate = app.add_subcommand("correlate", "representation counts and the correlation I");
    std::string cor_field = "3", set_a, set_b;
    std::int64_t cor_n = 0, cor_j = 0, alpha = -1, beta = -1;
    bool tables_on = false, tables_off = false;
    correlate->add_option("--q", cor_field, "field spec")->capture_default_str();
    correlate->add_option("--n", cor_n, "degree")->required();
    correlate->add_option("--j", cor_j, "cofactor degree in S = M_j * I_(n-j)")->required();
    correlate->add_option("--alpha", alpha, "scalar element index (default: smallest valid)");
    correlate->add_option("--beta", beta, "scalar element index (default: smallest valid)");
    correlate->add_option("--set-a", set_a, "all | random:SIZE[:SEED] | FILE")->required();
    correlate->add_option("--set-b", set_b, "all | random:SIZE[:SEED] | FILE")->required();
    correlate->add_flag("--tables", tables_on, "force per-G tables into the report");
    correlate->add_flag("--no-tables", tables_off, "omit per-G tables");

    // global flags remain usable after the subcommand name
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    char* text = nullptr;
    if (*verify) {
        int all_pass = 0;
        const ffc_status st = ffc_run_verify(level.c_str(), output.c_str(), seed, cap, &all_pass, &text);
        const int rc = emit(st, text);
        if (rc != 0) return rc;
        return all_pass ? 0 : 1;
    }
    if (*experiment) {
        std::ifstream in(config_path);
        if (!in) {
            std::cerr << "error: cannot open config file: " << config_path << std::endl;
            return 1;
        }
        std::stringstream buffer;
        buffer << in.rdbuf();
        const ffc_status st = ffc_run_experiment(buffer.str().c_str(), output.c_str(), &text);
        return emit(st, text);
    }
    if (*approx) {
        const ffc_status st = ffc_run_approx(approx_field.c_str(), xi.c_str(), approx_n,
                                             convention.c_str(), output.c_str(), &text);
        return emit(st, text);
    }
    if (*classes) {
        const ffc_status st = ffc_run_count_classes(cls_field.c_str(), cls_n, cls_ell, cls_h.c_str(),
                                                    output.c_str(), cap, &text);
        return emit(st, text);
    }
    if (*bounds) {
        const ffc_status st = ffc_run_bounds(lemma.c_str(), grid.c_str(), output.c_str(), seed, cap, &text);
        return emit(st, text);
    }
    if (*correlate) {
        const int tables = tables_on ? 1 : (tables_off ? 0 : -1);
        const ffc_status st =
            ffc_run_correlate(cor_field.c_str(), cor_n, cor_j, alpha, beta, set_a.c_str(),
                              set_b.c_str(), output.c_str(), seed, cap, tables, &text);
        return emit(st, text);
    }
    return 1;
}
