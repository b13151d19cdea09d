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

#include "harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace ffc {
namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
    try {
        return std::stoull(trim(s));
    } catch (...) {
        fail(Errc::parse_error, "bad " + what + ": " + s);
    }
}

Json qexp_json(const QExp& e) {
    if (!e.finite()) return Json("-inf");
    return Json(e.value());
}

Json rational_json(const Rational& r) {
    Json j;
    j["num"] = r.num();
    j["den"] = r.den();
    j["value"] = r.to_double();
    return j;
}

}  // namespace

SetSpec SetSpec::parse(const std::string& text) {
    SetSpec spec;
    const std::string t = trim(text);
    if (t == "all") {
        spec.kind = Kind::full;
        return spec;
    }
    if (t.rfind("random:", 0) == 0) {
        spec.kind = Kind::random;
        const std::string rest = t.substr(7);
        const auto colon = rest.find(':');
        spec.size = parse_u64(rest.substr(0, colon), "random set size");
        if (colon != std::string::npos) spec.seed = parse_u64(rest.substr(colon + 1), "random set seed");
        return spec;
    }
    if (t.empty()) fail(Errc::parse_error, "empty set spec");
    spec.kind = Kind::file;
    spec.path = t;
    return spec;
}

std::string SetSpec::str() const {
    switch (kind) {
        case Kind::full:
            return "all";
        case Kind::random:
            return "random:" + std::to_string(size) + (seed ? ":" + std::to_string(*seed) : "");
        case Kind::file:
            return path;
    }
    return "";
}

ExperimentConfig ExperimentConfig::from_kv_text(const std::string& text) {
    ExperimentConfig config;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        const std::string t = trim(line);
        if (t.empty()) continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) fail(Errc::parse_error, "expected key = value, got: " + t);
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (key == "field" || key == "q") {
            config.field_spec = value;
        } else if (key == "n") {
            config.n = static_cast<int>(parse_u64(value, "n"));
        } else if (key == "alpha") {
            config.alpha = static_cast<std::uint32_t>(parse_u64(value, "alpha"));
        } else if (key == "beta") {
            config.beta = static_cast<std::uint32_t>(parse_u64(value, "beta"));
        } else if (key == "eta") {
            try {
                config.eta = std::stod(value);
            } catch (...) {
                fail(Errc::parse_error, "bad eta: " + value);
            }
        } else if (key == "set_a" || key == "set-a") {
            config.set_a = SetSpec::parse(value);
        } else if (key == "set_b" || key == "set-b") {
            config.set_b = SetSpec::parse(value);
        } else if (key == "seed") {
            config.seed = parse_u64(value, "seed");
        } else if (key == "cap") {
            config.cap = parse_u64(value, "cap");
        } else if (key == "tables") {
            if (value == "auto")
                config.include_tables.reset();
            else if (value == "on")
                config.include_tables = true;
            else if (value == "off")
                config.include_tables = false;
            else
                fail(Errc::parse_error, "tables must be on/off/auto: " + value);
        } else if (key == "timings") {
            config.timings = value == "on";
        } else {
            fail(Errc::parse_error, "unknown config key: " + key);
        }
    }
    return config;
}

std::pair<std::uint32_t, std::uint32_t> default_scalars(const FieldDesc& f) {
    for (std::uint32_t a = 1; a < f.q(); ++a) {
        const std::uint32_t b = f.sub(1, a);
        if (b != 0) return {a, b};
    }
    fail(Errc::no_valid_scalars,
         "no nonzero alpha, beta with alpha + beta = 1 exist over F_" + std::to_string(f.q()));
}

ExperimentParams params_compute(const FieldDesc::Ptr& field, int n, std::optional<std::uint32_t> alpha,
                                std::optional<std::uint32_t> beta, double eta, std::uint64_t card_a,
                                std::uint64_t card_b) {
    if (n < 1) fail(Errc::invalid_argument, "n must be >= 1");
    if (eta <= 0) fail(Errc::invalid_argument, "eta must be positive");
    if (card_a == 0 || card_b == 0) fail(Errc::invalid_argument, "sets must be nonempty");
    std::uint32_t a, b;
    if (alpha || beta) {
        if (!alpha || !beta) fail(Errc::invalid_argument, "alpha and beta must be given together");
        a = *alpha;
        b = *beta;
        if (a == 0 || b == 0 || field->add(a, b) != 1)
            fail(Errc::scalar_sum_not_one, "need nonzero alpha, beta with alpha + beta = 1");
    } else {
        std::tie(a, b) = default_scalars(*field);
    }

    const double q = static_cast<double>(field->q());
    const double qn = std::pow(q, n);
    const double rho = qn / std::sqrt(static_cast<double>(card_a) * static_cast<double>(card_b));
    const double term1 = log_base_trunc(rho, q);
    const double term2 = log_base_trunc(log_base_trunc(term1, q), q);
    const double j_real = term1 + term2 + eta / std::log(q);
    const int j = static_cast<int>(std::ceil(j_real));
    if (j < 1 || j >= n)
        fail(Errc::j_out_of_range, "derived j = " + std::to_string(j) + " leaves no room in degree " +
                                       std::to_string(n));
    return ExperimentParams{field, n, a, b, eta, card_a, card_b, rho, j, n - j, n - j};
}

PolySet build_set(const FieldDesc::Ptr& field, int n, const SetSpec& spec, std::uint64_t run_seed,
                  const ResourceCap& cap, std::vector<std::string>* warnings) {
    switch (spec.kind) {
        case SetSpec::Kind::full:
            return PolySet::all(field, n, cap);
        case SetSpec::Kind::random:
            return PolySet::random_subset(field, n, spec.size, spec.seed.value_or(run_seed), cap);
        case SetSpec::Kind::file: {
            std::ifstream in(spec.path);
            if (!in) fail(Errc::io_error, "cannot open set file: " + spec.path);
            PolySet s = PolySet::empty(field, n, cap);
            std::string line;
            std::size_t lineno = 0;
            while (std::getline(in, line)) {
                ++lineno;
                const auto hash = line.find('#');
                if (hash != std::string::npos) line.resize(hash);
                const std::string t = trim(line);
                if (t.empty()) continue;
                Poly p(field);
                try {
                    p = Poly::parse(field, t);
                } catch (const Error& e) {
                    fail(Errc::file_format,
                         spec.path + ":" + std::to_string(lineno) + ": " + e.what());
                }
                if (!p.is_monic() || p.deg() != n)
                    fail(Errc::file_format, spec.path + ":" + std::to_string(lineno) +
                                                ": not monic of degree " + std::to_string(n));
                if (!s.insert(p) && warnings)
                    warnings->push_back("duplicate set entry ignored: " + t + " (" + spec.path + ":" +
                                        std::to_string(lineno) + ")");
            }
            return s;
        }
    }
    fail(Errc::internal_error, "unreachable set kind");
}

std::uint64_t correlation_triple_count(const PolySet& A, const PolySet& B, const FieldElement& alpha,
                                       const FieldElement& beta, int j, const ResourceCap& cap) {
    const int n = A.degree();
    const FieldDesc::Ptr& field = A.field_ptr();
    PolySet S = PolySet::empty(field, n, cap);
    for (const Poly& c : MonicRange(field, j, cap))
        for (const Poly& p : irreducibles(field, n - j, cap))
            S.insert_index(monic_to_index(c * p));

    cap.check(A.size() * B.size(), "triple enumeration");
    std::uint64_t count = 0;
    for (const std::uint64_t ai : A.indices()) {
        const Poly a_scaled = monic_from_index(field, n, ai).scaled(alpha.index());
        for (const std::uint64_t bi : B.indices()) {
            const Poly g = a_scaled + monic_from_index(field, n, bi).scaled(beta.index());
            if (S.contains_index(monic_to_index(g))) ++count;
        }
    }
    return count;
}

namespace {

Json correlation_json(const CorrelationReport& rep, const FieldDesc::Ptr& field, bool tables) {
    Json j;
    j["n"] = rep.n;
    j["j"] = rep.j;
    j["k"] = rep.k;
    j["threshold"] = rep.threshold;
    j["card_a"] = rep.card_a;
    j["card_b"] = rep.card_b;
    j["I"] = rep.correlation;
    j["I1"] = rational_json(rep.i1);
    j["I2"] = rational_json(rep.i2);
    j["sum_u"] = rep.sum_u;
    j["pair_count"] = rep.pair_count;
    if (tables) {
        Json rows = Json::array();
        for (std::uint64_t gi = 0; gi < rep.u.size(); ++gi) {
            Json row;
            row["g"] = monic_from_index(field, rep.n, gi).str();
            row["u"] = rep.u[gi];
            row["v"] = static_cast<int>(rep.v[gi]);
            row["w"] = rep.w[gi];
            rows.push_back(std::move(row));
        }
        j["tables"] = std::move(rows);
    }
    return j;
}

}  // namespace

Json experiment_report(const ExperimentConfig& config) {
    const auto t0 = std::chrono::steady_clock::now();
    const FieldDesc::Ptr field = FieldDesc::from_spec(config.field_spec);
    const ResourceCap cap{config.cap};
    std::vector<std::string> warnings;

    const PolySet A = build_set(field, config.n, config.set_a, config.seed, cap, &warnings);
    const PolySet B = build_set(field, config.n, config.set_b, config.seed, cap, &warnings);
    const ExperimentParams params = params_compute(field, config.n, config.alpha, config.beta,
                                                   config.eta, A.size(), B.size());

    const FieldElement alpha = field->element(params.alpha);
    const FieldElement beta = field->element(params.beta);
    const CorrelationReport rep = correlation(A, B, alpha, beta, params.j, cap);

    const double card_product = static_cast<double>(A.size()) * static_cast<double>(B.size());
    const double c_emp = static_cast<double>(rep.pair_count) * params.n / card_product;
    const double q = static_cast<double>(field->q());

    // Conclusion threshold in the source's own form, with the unspecified
    // constant c2 reported at c2 = eta.
    const double lr = log_base_trunc(params.rho, q);
    const double lllr = log_base_trunc(log_base_trunc(lr, q), q);
    const double threshold_rho_form = params.n - lr - lllr - params.eta / std::log(q) - 1.0;

    // density condition (#A #B)^(1/2) >= q^((6/7+eps)n), plain logarithms
    const double exponent = 0.5 * std::log(card_product) / std::log(q) / params.n;
    const double epsilon_implied = exponent - 6.0 / 7.0;

    Json j;
    j["command"] = "experiment";
    j["version"] = kVersion;
    j["field"] = field->spec();
    j["n"] = params.n;
    j["alpha"] = params.alpha;
    j["beta"] = params.beta;
    j["eta"] = params.eta;
    j["set_a"] = Json{{"spec", config.set_a.str()}, {"size", A.size()}};
    j["set_b"] = Json{{"spec", config.set_b.str()}, {"size", B.size()}};
    j["seed"] = config.seed;
    j["cap"] = config.cap;
    j["rho"] = params.rho;
    j["j"] = params.j;
    j["k"] = params.k;
    j["threshold"] = params.threshold;
    const bool tables =
        config.include_tables.value_or(monic_count(*field, params.n) <= 4096);
    j["correlation"] = correlation_json(rep, field, tables);
    j["c_emp"] = c_emp;
    j["verdict"] = Json{{"pair_count", rep.pair_count},
                         {"pairs_needed_c1_eq_1", card_product / params.n},
                         {"meets_c1_eq_1", static_cast<double>(rep.pair_count) >= card_product / params.n},
                         {"threshold_construction", params.threshold},
                         {"threshold_rho_form_c2_eq_eta", threshold_rho_form}};
    j["density"] = Json{{"exponent", exponent},
                        {"epsilon_implied", epsilon_implied},
                        {"satisfied", epsilon_implied >= 0.0}};
    j["warnings"] = warnings;
    if (config.timings) {
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
        j["wall_time_ms"] = ms;
    }
    return j;
}

Json correlate_report(const std::string& field_spec, int n, int j, std::optional<std::uint32_t> alpha,
                      std::optional<std::uint32_t> beta, const std::string& set_a,
                      const std::string& set_b, std::uint64_t seed, std::uint64_t cap,
                      std::optional<bool> include_tables) {
    const FieldDesc::Ptr field = FieldDesc::from_spec(field_spec);
    const ResourceCap rcap{cap};
    std::vector<std::string> warnings;
    const SetSpec spec_a = SetSpec::parse(set_a);
    const SetSpec spec_b = SetSpec::parse(set_b);
    const PolySet A = build_set(field, n, spec_a, seed, rcap, &warnings);
    const PolySet B = build_set(field, n, spec_b, seed, rcap, &warnings);
    std::uint32_t a, b;
    if (alpha && beta) {
        a = *alpha;
        b = *beta;
    } else if (!alpha && !beta) {
        std::tie(a, b) = default_scalars(*field);
    } else {
        fail(Errc::invalid_argument, "alpha and beta must be given together");
    }
    const CorrelationReport rep = correlation(A, B, field->element(a), field->element(b), j, rcap);

    Json out;
    out["command"] = "correlate";
    out["version"] = kVersion;
    out["field"] = field->spec();
    out["n"] = n;
    out["j"] = j;
    out["alpha"] = a;
    out["beta"] = b;
    out["set_a"] = Json{{"spec", spec_a.str()}, {"size", A.size()}};
    out["set_b"] = Json{{"spec", spec_b.str()}, {"size", B.size()}};
    out["seed"] = seed;
    const bool tables = include_tables.value_or(monic_count(*field, n) <= 4096);
    out["correlation"] = correlation_json(rep, field, tables);
    out["warnings"] = warnings;
    return out;
}

Json approx_report(const std::string& field_spec, const std::string& xi_text, int n,
                   const std::string& convention) {
    const FieldDesc::Ptr field = FieldDesc::from_spec(field_spec);
    const LaurentPoint xi = LaurentPoint::parse(field, xi_text);
    DioConvention conv;
    if (convention == "strict")
        conv = DioConvention::strict();
    else if (convention == "floor" || convention.empty())
        conv = DioConvention::floor_default();
    else
        fail(Errc::invalid_argument, "convention must be strict or floor: " + convention);
    const RationalApprox approx = dirichlet_approx(xi, n, conv);
    Json j;
    j["command"] = "approx";
    j["version"] = kVersion;
    j["field"] = field->spec();
    j["xi"] = xi.str();
    j["n"] = n;
    j["convention"] = conv.name();
    j["g"] = approx.g.str();
    j["h"] = approx.h.str();
    j["gamma_exponent"] = qexp_json(approx.gamma_exponent);
    return j;
}

Json count_classes_report(const std::string& field_spec, int n, int ell, const std::string& h_text,
                          std::uint64_t cap) {
    const FieldDesc::Ptr field = FieldDesc::from_spec(field_spec);
    const Poly h = Poly::parse(field, h_text);
    const ResourceCap rcap{cap};
    const DiscrepancyReport rep = class_discrepancy_report(field, n, ell, h, rcap);

    Json j;
    j["command"] = "count-classes";
    j["version"] = kVersion;
    j["field"] = field->spec();
    j["n"] = n;
    j["ell"] = ell;
    j["h"] = h.str();
    j["irreducible_total"] = rep.irreducible_total;
    j["closed_form_count"] = count_irreducibles(*field, n);
    j["group_size"] = group_size(*field, ell, h);
    j["noninvertible_count"] = rep.noninvertible_count;
    Json rows = Json::array();
    std::uint64_t partition = rep.noninvertible_count;
    for (const auto& row : rep.rows) {
        Json r;
        r["lead"] = row.lead;
        r["residue"] = row.residue.str();
        r["count"] = row.count;
        r["main_term"] = rational_json(row.main_term);
        r["abs_error"] = row.abs_error;
        r["normalized_error"] = row.normalized_error;
        rows.push_back(std::move(r));
        partition += row.count;
    }
    j["rows"] = std::move(rows);
    j["partition_total"] = partition;
    j["max_normalized_error"] = rep.max_normalized_error;
    return j;
}

// --- bound-check grids ---

namespace {

struct GridSpec {
    std::map<std::string, std::vector<long long>> values;

    bool has(const std::string& key) const { return values.count(key) != 0; }
    std::vector<long long> get(const std::string& key, std::vector<long long> fallback) const {
        const auto it = values.find(key);
        return it == values.end() ? fallback : it->second;
    }
};

GridSpec parse_grid(const std::string& text) {
    GridSpec spec;
    if (text.empty() || text == "default") return spec;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        const std::string t = trim(item);
        if (t.empty()) continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos) fail(Errc::parse_error, "grid items look like key=value: " + t);
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        std::vector<long long> out;
        const auto colon = value.find(':');
        if (colon != std::string::npos) {
            const long long lo = static_cast<long long>(parse_u64(value.substr(0, colon), "grid bound"));
            const long long hi = static_cast<long long>(parse_u64(value.substr(colon + 1), "grid bound"));
            if (hi < lo) fail(Errc::parse_error, "empty grid range: " + t);
            for (long long v = lo; v <= hi; ++v) out.push_back(v);
        } else {
            std::stringstream vs(value);
            std::string tok;
            while (std::getline(vs, tok, ','))
                out.push_back(static_cast<long long>(parse_u64(tok, "grid value")));
        }
        spec.values[key] = std::move(out);
    }
    return spec;
}

/// First `want` monic irreducibles of each degree in [1, max_deg].
std::vector<Poly> grid_denominators(const FieldDesc::Ptr& field, int max_deg, std::size_t want) {
    std::vector<Poly> out;
    for (int d = 1; d <= max_deg; ++d) {
        std::size_t taken = 0;
        for (std::uint64_t i = 0; i < monic_count(*field, d) && taken < want; ++i) {
            const Poly cand = monic_from_index(field, d, i);
            if (is_irreducible(cand)) {
                out.push_back(cand);
                ++taken;
            }
        }
    }
    return out;
}

/// A = 1, plus the first nonzero polynomial of degree deg(B)-1 coprime to B.
std::vector<Poly> grid_numerators(const FieldDesc::Ptr& field, const Poly& B) {
    std::vector<Poly> out{Poly::one(field)};
    const int target = B.deg() - 1;
    if (target >= 1) {
        const std::uint64_t q = field->q();
        const std::uint64_t lo = pow_u64(q, static_cast<unsigned>(target));
        for (std::uint64_t idx = lo; idx < lo * q; ++idx) {
            std::vector<std::uint32_t> c;
            std::uint64_t v = idx;
            while (v != 0) {
                c.push_back(static_cast<std::uint32_t>(v % q));
                v /= q;
            }
            const Poly cand = Poly::from_indices(field, std::move(c));
            if (gcd(cand, B).deg() == 0 && !(cand == out.front())) {
                out.push_back(cand);
                break;
            }
        }
    }
    return out;
}

/// gamma = 0 and one admissible perturbation 1/T^(2 deg B + 1).
std::vector<LaurentPoint> grid_gammas(const FieldDesc::Ptr& field, const Poly& B, bool perturb) {
    std::vector<LaurentPoint> out{LaurentPoint::zero(field)};
    if (perturb)
        out.push_back(LaurentPoint::from_rational(Poly::one(field),
                                                  Poly::t_power(field, 2 * B.deg() + 1)));
    return out;
}

}  // namespace

Json bounds_report(const std::string& lemma, const std::string& grid_spec, std::uint64_t seed,
                   std::uint64_t cap) {
    const GridSpec grid = parse_grid(grid_spec);
    const ResourceCap rcap{cap};

    Json j;
    j["command"] = "bounds";
    j["version"] = kVersion;
    j["lemma"] = lemma;
    j["grid"] = grid_spec.empty() ? "default" : grid_spec;
    j["seed"] = seed;
    Json points = Json::array();
    double max_ratio = 0.0;
    std::uint64_t excluded = 0;

    const std::vector<long long> qs = grid.get("q", {2, 3});
    if (lemma == "va03") {
        const auto ks = grid.get("k", {1, 2, 3});
        const auto ls = grid.get("l", {1, 2, 3});
        const auto bdegs = grid.get("bdeg", {1, 2, 3});
        const bool perturb = grid.get("pert", {1}).front() != 0;
        for (const long long qv : qs) {
            const FieldDesc::Ptr field = FieldDesc::from_spec(std::to_string(qv));
            const int max_bdeg = static_cast<int>(*std::max_element(bdegs.begin(), bdegs.end()));
            for (const Poly& B : grid_denominators(field, max_bdeg, 2)) {
                if (std::find(bdegs.begin(), bdegs.end(), B.deg()) == bdegs.end()) continue;
                for (const Poly& A : grid_numerators(field, B)) {
                    for (const LaurentPoint& gamma : grid_gammas(field, B, perturb)) {
                        const LaurentPoint xi = LaurentPoint::from_rational(A, B) + gamma;
                        for (const long long k : ks) {
                            for (const long long l : ls) {
                                const BoundCheck c = bilinear_bound_check(
                                    xi, A, B, static_cast<int>(k), static_cast<int>(l), rcap);
                                Json p;
                                p["field"] = field->spec();
                                p["a"] = A.str();
                                p["b"] = B.str();
                                p["gamma"] = gamma.str();
                                p["k"] = k;
                                p["l"] = l;
                                p["lhs"] = c.lhs;
                                p["rhs"] = c.rhs;
                                p["ratio"] = c.ratio;
                                points.push_back(std::move(p));
                                max_ratio = std::max(max_ratio, c.ratio);
                            }
                        }
                    }
                }
            }
        }
    } else if (lemma == "irredsum") {
        const auto ns = grid.get("n", {2, 3, 4, 5, 6});
        const auto bdegs = grid.get("bdeg", {1, 2, 3});
        const bool perturb = grid.get("pert", {1}).front() != 0;
        for (const long long qv : qs) {
            const FieldDesc::Ptr field = FieldDesc::from_spec(std::to_string(qv));
            const int max_bdeg = static_cast<int>(*std::max_element(bdegs.begin(), bdegs.end()));
            for (const Poly& B : grid_denominators(field, max_bdeg, 2)) {
                if (std::find(bdegs.begin(), bdegs.end(), B.deg()) == bdegs.end()) continue;
                for (const Poly& A : grid_numerators(field, B)) {
                    for (const LaurentPoint& gamma : grid_gammas(field, B, perturb)) {
                        const LaurentPoint xi = LaurentPoint::from_rational(A, B) + gamma;
                        for (const long long n : ns) {
                            const BoundCheck c =
                                irred_sum_bound_check(xi, A, B, static_cast<int>(n), rcap);
                            Json p;
                            p["field"] = field->spec();
                            p["a"] = A.str();
                            p["b"] = B.str();
                            p["gamma"] = gamma.str();
                            p["n"] = n;
                            p["lhs"] = c.lhs;
                            p["rhs"] = c.rhs;
                            p["ratio"] = c.ratio;
                            points.push_back(std::move(p));
                            max_ratio = std::max(max_ratio, c.ratio);
                        }
                    }
                }
            }
        }
    } else if (lemma == "fsmain") {
        const auto ns = grid.get("n", {4, 5, 6});
        const auto js = grid.get("j", {1, 2});
        const auto samples = grid.get("samples", {8}).front();
        const auto dens = grid.get("dens", {3}).front();
        for (const long long qv : qs) {
            const FieldDesc::Ptr field = FieldDesc::from_spec(std::to_string(qv));
            for (const long long n : ns) {
                for (const long long jj : js) {
                    if (jj >= n) continue;
                    const int k = static_cast<int>(n - jj);
                    FsSampleSpec spec;
                    spec.count = static_cast<std::uint64_t>(samples);
                    spec.seed = seed ^ (static_cast<std::uint64_t>(qv) << 32) ^
                                (static_cast<std::uint64_t>(n) << 16) ^ static_cast<std::uint64_t>(jj);
                    spec.max_den_degree = static_cast<int>(dens);
                    const FsBoundReport rep = fs_bound_check(field, static_cast<int>(n),
                                                             static_cast<int>(jj), k, spec, rcap);
                    Json p;
                    p["field"] = field->spec();
                    p["n"] = n;
                    p["j"] = jj;
                    p["k"] = k;
                    p["hypothesis_holds"] = rep.hypothesis_holds;
                    p["k_condition_holds"] = rep.k_condition_holds;
                    p["bound_vacuous"] = rep.bound_vacuous;
                    p["rejected_samples"] = rep.rejected;
                    Json rows = Json::array();
                    for (const auto& s : rep.samples) {
                        Json r;
                        r["xi"] = s.xi.str();
                        r["fs_abs"] = s.fs_abs;
                        r["bound"] = s.bound;
                        r["ratio"] = s.ratio;
                        rows.push_back(std::move(r));
                    }
                    p["samples"] = std::move(rows);
                    p["max_ratio"] = rep.max_ratio;
                    points.push_back(std::move(p));
                    if (rep.bound_vacuous)
                        ++excluded;
                    else
                        max_ratio = std::max(max_ratio, rep.max_ratio);
                }
            }
        }
    } else {
        fail(Errc::invalid_argument, "lemma must be va03, irredsum or fsmain: " + lemma);
    }

    j["points"] = std::move(points);
    j["point_count"] = j["points"].size();
    j["excluded"] = excluded;
    j["max_ratio"] = max_ratio;
    return j;
}

// --- verification suites ---

namespace {

struct SuiteGrid {
    VerifyLevel level;
    bool full() const { return level == VerifyLevel::full; }
};

SuiteResult suite_eq_sum(const SuiteGrid& grid, std::uint64_t seed) {
    std::uint64_t checks = 0;
    std::string firstfail;
    const std::uint64_t trials_per_q = grid.full() ? 5000 : 1000;
    for (const std::uint32_t qv : {2u, 3u}) {
        const FieldDesc::Ptr field = FieldDesc::prime(qv);
        SplitMix64 rng(seed ^ (0x5EEDULL << qv));
        for (std::uint64_t t = 0; t < trials_per_q; ++t) {
            const int dv = 1 + static_cast<int>(rng.below(4));
            const Poly den = monic_from_index(field, dv, rng.below(monic_count(*field, dv)));
            std::vector<std::uint32_t> numc(static_cast<std::size_t>(dv), 0);
            for (auto& c : numc) c = static_cast<std::uint32_t>(rng.below(qv));
            const LaurentPoint xi =
                LaurentPoint::from_rational(Poly::from_indices(field, std::move(numc)), den);
            const int k = 1 + static_cast<int>(rng.below(6));
            CycloValue direct = CycloValue::zero(qv);
            for (const Poly& a : MonicRange(field, k)) direct += e_times(xi, a);
            ++checks;
            if (direct != geometric_sum_closed_form(xi, k) && firstfail.empty())
                firstfail = "xi=" + xi.str() + " k=" + std::to_string(k) + " q=" + std::to_string(qv);
        }
    }
    return SuiteResult{"geometric_sum_closed_form", firstfail.empty(), checks, firstfail};
}

SuiteResult suite_pnt(const SuiteGrid& grid) {
    std::uint64_t checks = 0;
    std::string firstfail;
    const std::vector<std::string> fields =
        grid.full() ? std::vector<std::string>{"2", "3", "4", "5"} : std::vector<std::string>{"2", "3"};
    for (const auto& spec : fields) {
        const FieldDesc::Ptr field = FieldDesc::from_spec(spec);
        // full level runs small characteristics out to degree 10; the larger
        // fields stop at 8 to stay inside the enumeration budget
        const int max_n = grid.full() ? (field->q() <= 3 ? 10 : 8) : 6;
        for (int n = 1; n <= max_n; ++n) {
            std::uint64_t sum = 0;
            for (const Poly& f : MonicRange(field, n)) sum += static_cast<std::uint64_t>(lambda_deg(f));
            ++checks;
            if (sum != pow_u64(field->q(), static_cast<unsigned>(n)) && firstfail.empty())
                firstfail = "q=" + spec + " n=" + std::to_string(n) + " sum=" + std::to_string(sum);
        }
    }
    return SuiteResult{"von_mangoldt_full_sum", firstfail.empty(), checks, firstfail};
}

SuiteResult suite_lambda_divisor(const SuiteGrid& grid) {
    std::uint64_t checks = 0;
    std::string firstfail;
    const int max_n = grid.full() ? 8 : 6;
    for (const std::uint32_t qv : {2u, 3u}) {
        const FieldDesc::Ptr field = FieldDesc::prime(qv);
        for (int n = 1; n <= max_n; ++n) {
            for (const Poly& f : MonicRange(field, n)) {
                long long sum = 0;
                for (const Poly& g : divisors(f)) sum += lambda_deg(g);
                ++checks;
                if (sum != f.deg() && firstfail.empty())
                    firstfail = "q=" + std::to_string(qv) + " F=" + f.str();
            }
        }
    }
    return SuiteResult{"von_mangoldt_divisor_sum", firstfail.empty(), checks, firstfail};
}

SuiteResult suite_vaughan(const SuiteGrid& grid) {
    std::uint64_t checks = 0;
    std::string firstfail;
    const int max_n = grid.full() ? 6 : 5;
    for (const std::uint32_t qv : {2u, 3u}) {
        const FieldDesc::Ptr field = FieldDesc::prime(qv);
        for (double y : {1.5, 2.5}) {
            for (double z : {1.5, 2.5}) {
                for (int n = static_cast<int>(z) + 1; n <= max_n; ++n) {
                    for (const Poly& f : MonicRange(field, n)) {
                        const VaughanTerms t = vaughan_check(f, y, z);
                        ++checks;
                        if (t.lambda != t.term1 - t.term2 + t.term3 && firstfail.empty())
                            firstfail = "q=" + std::to_string(qv) + " F=" + f.str() +
                                        " y=" + std::to_string(y) + " z=" + std::to_string(z);
                    }
                }
            }
        }
    }
    return SuiteResult{"vaughan_identity", firstfail.empty(), checks, firstfail};
}

SuiteResult suite_class_partition(const SuiteGrid& grid) {
    std::uint64_t checks = 0;
    std::string firstfail;
    const int max_n = grid.full() ? 10 : 6;
    for (const std::uint32_t qv : {2u, 3u}) {
        const FieldDesc::Ptr field = FieldDesc::prime(qv);
        std::vector<Poly> moduli{Poly::one(field), Poly::t(field),
                                 Poly::t(field) + Poly::one(field), Poly::t_power(field, 2),
                                 Poly::t_power(field, 2) + Poly::one(field)};
        for (int n = 2; n <= max_n; ++n) {
            const auto irred = irreducible_indices(field, n);
            const std::uint64_t closed = count_irreducibles(*field, n);
            for (int ell = 0; ell <= 2; ++ell) {
                for (const Poly& h : moduli) {
                    const auto rep = class_discrepancy_report(field, n, ell, h, irred, ResourceCap{});
                    std::uint64_t partition = rep.noninvertible_count;
                    for (const auto& row : rep.rows) partition += row.count;
                    ++checks;
                    const bool ok = partition == rep.irreducible_total &&
                                    rep.irreducible_total == closed &&
                                    (n <= h.deg() || rep.noninvertible_count == 0);
                    if (!ok && firstfail.empty())
                        firstfail = "q=" + std::to_string(qv) + " n=" + std::to_string(n) +
                                    " ell=" + std::to_string(ell) + " h=" + h.str();
                }
            }
        }
    }
    return SuiteResult{"residue_class_partition", firstfail.empty(), checks, firstfail};
}

SuiteResult suite_dirichlet(const SuiteGrid& grid) {
    std::uint64_t checks = 0;
    std::string firstfail;
    const int max_den = grid.full() ? 4 : 3;
    const int max_n = grid.full() ? 8 : 6;
    for (const std::uint32_t qv : {2u, 3u}) {
        const FieldDesc::Ptr field = FieldDesc::prime(qv);
        for (int dv = 0; dv <= max_den; ++dv) {
            const std::uint64_t den_count = monic_count(*field, dv);
            const std::uint64_t num_count = pow_u64(field->q(), static_cast<unsigned>(dv));
            for (std::uint64_t di = 0; di < den_count; ++di) {
                const Poly den = monic_from_index(field, dv, di);
                for (std::uint64_t ni = 0; ni < num_count; ++ni) {
                    std::vector<std::uint32_t> c;
                    std::uint64_t v = ni;
                    while (v != 0) {
                        c.push_back(static_cast<std::uint32_t>(v % qv));
                        v /= qv;
                    }
                    const Poly num = Poly::from_indices(field, std::move(c));
                    if (gcd(num, den).deg() != 0) continue;  // not canonical
                    if (num.is_zero() && !den.is_one()) continue;
                    const LaurentPoint xi = LaurentPoint::from_rational(num, den);
                    for (int n = 1; n <= max_n; ++n) {
                        const auto all = dirichlet_oracle(xi, n);
                        ++checks;
                        if (all.size() != 1 && firstfail.empty()) {
                            firstfail = "oracle size " + std::to_string(all.size()) + " at xi=" +
                                        xi.str() + " n=" + std::to_string(n) + " q=" + std::to_string(qv);
                            continue;
                        }
                        const RationalApprox approx = dirichlet_approx(xi, n);
                        if (!all.empty() &&
                            !(approx.g == all.front().g && approx.h == all.front().h) &&
                            firstfail.empty())
                            firstfail = "cf/oracle mismatch at xi=" + xi.str() + " n=" +
                                        std::to_string(n) + " q=" + std::to_string(qv);
                    }
                }
            }
        }
    }
    return SuiteResult{"dirichlet_existence_uniqueness", firstfail.empty(), checks, firstfail};
}

SuiteResult suite_correlation(const SuiteGrid& grid, std::uint64_t seed) {
    std::uint64_t checks = 0;
    std::string firstfail;
    const std::uint64_t trials = grid.full() ? 100 : 20;
    const int max_n = grid.full() ? 4 : 3;
    const FieldDesc::Ptr field = FieldDesc::prime(3);
    const FieldElement alpha = field->element(2), beta = field->element(2);
    SplitMix64 rng(seed ^ 0xC0FFEEULL);
    for (std::uint64_t t = 0; t < trials; ++t) {
        const int n = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n - 1)));
        const std::uint64_t universe = monic_count(*field, n);
        const std::uint64_t size_a = 1 + rng.below(universe);
        const std::uint64_t size_b = 1 + rng.below(universe);
        const PolySet A = PolySet::random_subset(field, n, size_a, rng.next());
        const PolySet B = PolySet::random_subset(field, n, size_b, rng.next());
        const int j = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
        const CorrelationReport rep = correlation(A, B, alpha, beta, j);
        const std::uint64_t oracle = correlation_triple_count(A, B, alpha, beta, j);
        ++checks;
        const Rational i_total = rep.i1 + rep.i2;
        const bool ok = rep.correlation == oracle && rep.sum_u == A.size() * B.size() &&
                        i_total == Rational::integer(static_cast<long long>(rep.correlation));
        if (!ok && firstfail.empty())
            firstfail = "n=" + std::to_string(n) + " j=" + std::to_string(j) + " I=" +
                        std::to_string(rep.correlation) + " oracle=" + std::to_string(oracle);
    }
    return SuiteResult{"correlation_triple_count", firstfail.empty(), checks, firstfail};
}

}  // namespace

std::vector<SuiteResult> verify_all(VerifyLevel level, std::uint64_t seed, const ResourceCap&) {
    const SuiteGrid grid{level};
    std::vector<SuiteResult> out;
    out.push_back(suite_eq_sum(grid, seed));
    out.push_back(suite_pnt(grid));
    out.push_back(suite_lambda_divisor(grid));
    out.push_back(suite_vaughan(grid));
    out.push_back(suite_class_partition(grid));
    out.push_back(suite_dirichlet(grid));
    out.push_back(suite_correlation(grid, seed));
    return out;
}

Json verify_report(VerifyLevel level, std::uint64_t seed, std::uint64_t cap) {
    Json j;
    j["command"] = "verify";
    j["version"] = kVersion;
    j["level"] = level == VerifyLevel::full ? "full" : "quick";
    j["seed"] = seed;
    j["cap"] = cap;
    Json suites = Json::array();
    bool all = true;
    for (const SuiteResult& s : verify_all(level, seed, ResourceCap{cap})) {
        Json row;
        row["name"] = s.name;
        row["pass"] = s.pass;
        row["checks"] = s.checks;
        row["detail"] = s.detail;
        suites.push_back(std::move(row));
        all = all && s.pass;
    }
    j["suites"] = std::move(suites);
    j["all_pass"] = all;
    return j;
}

// --- CSV rendering ---

namespace {

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string json_scalar_to_csv(const Json& v) {
    if (v.is_string()) return csv_escape(v.get<std::string>());
    return v.dump();
}

void flatten(const std::string& prefix, const Json& v, std::string& out) {
    if (v.is_object()) {
        for (const auto& [key, val] : v.items()) {
            if (key == "tables" || key == "points" || key == "rows" || key == "suites" ||
                key == "samples")
                continue;
            flatten(prefix.empty() ? key : prefix + "." + key, val, out);
        }
    } else if (v.is_array()) {
        std::string joined;
        for (const auto& item : v) {
            if (!joined.empty()) joined += ";";
            joined += item.is_string() ? item.get<std::string>() : item.dump();
        }
        out += prefix + "," + csv_escape(joined) + "\n";
    } else {
        out += prefix + "," + json_scalar_to_csv(v) + "\n";
    }
}

void table_to_csv(const Json& rows, std::string& out) {
    if (rows.empty()) return;
    std::string header;
    for (const auto& [key, val] : rows.front().items()) {
        (void)val;
        if (!header.empty()) header += ",";
        header += key;
    }
    out += header + "\n";
    for (const auto& row : rows) {
        std::string line;
        for (const auto& [key, val] : row.items()) {
            (void)key;
            if (!line.empty()) line += ",";
            if (val.is_object() && val.contains("value"))
                line += json_scalar_to_csv(val["value"]);
            else if (val.is_array() || val.is_object())
                line += csv_escape(val.dump());
            else
                line += json_scalar_to_csv(val);
        }
        out += line + "\n";
    }
}

}  // namespace

std::string report_to_csv(const Json& report) {
    std::string out = "key,value\n";
    flatten("", report, out);
    for (const char* table_key : {"rows", "points", "suites", "tables"}) {
        if (report.contains(table_key)) {
            out += "\n";
            table_to_csv(report[table_key], out);
            break;
        }
    }
    if (report.contains("correlation") && report["correlation"].contains("tables")) {
        out += "\n";
        table_to_csv(report["correlation"]["tables"], out);
    }
    return out;
}

}  // namespace ffc
