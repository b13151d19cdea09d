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

#ifndef FFC_HARNESS_HPP
#define FFC_HARNESS_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "circle.hpp"
#include "resclass.hpp"

namespace ffc {

using Json = nlohmann::ordered_json;

/// Set source: "all", "random:SIZE:SEED" (SEED optional, falls back to the
/// run seed), or a file path with one polynomial per line.
struct SetSpec {
    enum class Kind { full, random, file } kind = Kind::full;
    std::uint64_t size = 0;
    std::optional<std::uint64_t> seed;
    std::string path;

    static SetSpec parse(const std::string& text);
    std::string str() const;
};

struct ExperimentConfig {
    std::string field_spec = "3";
    int n = 4;
    std::optional<std::uint32_t> alpha;  // element indices; defaulted when absent
    std::optional<std::uint32_t> beta;
    double eta = 0.5;
    SetSpec set_a;
    SetSpec set_b;
    std::uint64_t seed = 0;
    std::uint64_t cap = 10'000'000;
    std::optional<bool> include_tables;  // default: only when q^n is small
    bool timings = false;                // off by default: reports stay byte-reproducible

    /// Flat "key = value" text, one pair per line, '#' comments.
    static ExperimentConfig from_kv_text(const std::string& text);
};

/// Derived run parameters. rho = q^n / sqrt(#A #B) and
/// j = ceil(log_q rho + log_q log_q log_q rho + eta/log q), every log_q
/// truncated below at 1; k = n - j.
struct ExperimentParams {
    FieldDesc::Ptr field;
    int n;
    std::uint32_t alpha;
    std::uint32_t beta;
    double eta;
    std::uint64_t card_a;
    std::uint64_t card_b;
    double rho;
    int j;
    int k;
    int threshold;  // n - j
};

ExperimentParams params_compute(const FieldDesc::Ptr& field, int n, std::optional<std::uint32_t> alpha,
                                std::optional<std::uint32_t> beta, double eta, std::uint64_t card_a,
                                std::uint64_t card_b);

/// Smallest valid (alpha, beta): nonzero with alpha + beta = 1; rejected for
/// q = 2 where no such pair exists.
std::pair<std::uint32_t, std::uint32_t> default_scalars(const FieldDesc& f);

PolySet build_set(const FieldDesc::Ptr& field, int n, const SetSpec& spec, std::uint64_t run_seed,
                  const ResourceCap& cap, std::vector<std::string>* warnings);

/// Independent triple enumeration #{(a,b,s) in A x B x S : alpha a + beta b = s}
/// with S built directly from products C*P; the oracle for I.
std::uint64_t correlation_triple_count(const PolySet& A, const PolySet& B, const FieldElement& alpha,
                                       const FieldElement& beta, int j, const ResourceCap& cap = {});

// --- report builders (one per CLI subcommand) ---

Json experiment_report(const ExperimentConfig& config);
Json correlate_report(const std::string& field_spec, int n, int j, std::optional<std::uint32_t> alpha,
                      std::optional<std::uint32_t> beta, const std::string& set_a,
                      const std::string& set_b, std::uint64_t seed, std::uint64_t cap,
                      std::optional<bool> include_tables);
Json approx_report(const std::string& field_spec, const std::string& xi_text, int n,
                   const std::string& convention);
Json count_classes_report(const std::string& field_spec, int n, int ell, const std::string& h_text,
                          std::uint64_t cap);
Json bounds_report(const std::string& lemma, const std::string& grid_spec, std::uint64_t seed,
                   std::uint64_t cap);

enum class VerifyLevel { quick, full };

struct SuiteResult {
    std::string name;
    bool pass;
    std::uint64_t checks;
    std::string detail;
};

/// Runs every identity/property suite; failures are report content, not
/// exceptions.
std::vector<SuiteResult> verify_all(VerifyLevel level, std::uint64_t seed, const ResourceCap& cap);
Json verify_report(VerifyLevel level, std::uint64_t seed, std::uint64_t cap);

/// CSV rendering of any report produced above.
std::string report_to_csv(const Json& report);

}  // namespace ffc

#endif
