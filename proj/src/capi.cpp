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

#include "ffcircle/ffcircle.h"

#include <cstring>
#include <string>

#include "harness.hpp"

using namespace ffc;

struct ffc_field {
    FieldDesc::Ptr impl;
};

struct ffc_poly {
    Poly impl;
};

namespace {

thread_local std::string g_last_error;

ffc_status to_status(Errc code) {
    switch (code) {
        case Errc::ok: return FFC_OK;
        case Errc::invalid_argument: return FFC_ERR_INVALID_ARGUMENT;
        case Errc::parse_error: return FFC_ERR_PARSE;
        case Errc::division_by_zero: return FFC_ERR_DIVISION_BY_ZERO;
        case Errc::field_mismatch: return FFC_ERR_FIELD_MISMATCH;
        case Errc::characteristic_mismatch: return FFC_ERR_CHARACTERISTIC_MISMATCH;
        case Errc::resource_limit: return FFC_ERR_RESOURCE_LIMIT;
        case Errc::constant_input: return FFC_ERR_CONSTANT_INPUT;
        case Errc::zero_input: return FFC_ERR_ZERO_INPUT;
        case Errc::not_monic: return FFC_ERR_NOT_MONIC;
        case Errc::zero_denominator: return FFC_ERR_ZERO_DENOMINATOR;
        case Errc::no_approximant: return FFC_ERR_NO_APPROXIMANT;
        case Errc::scalar_sum_not_one: return FFC_ERR_SCALAR_SUM_NOT_ONE;
        case Errc::precondition_violated: return FFC_ERR_PRECONDITION;
        case Errc::degree_too_small: return FFC_ERR_DEGREE_TOO_SMALL;
        case Errc::file_format: return FFC_ERR_FILE_FORMAT;
        case Errc::size_too_large: return FFC_ERR_SIZE_TOO_LARGE;
        case Errc::no_valid_scalars: return FFC_ERR_NO_VALID_SCALARS;
        case Errc::j_out_of_range: return FFC_ERR_J_OUT_OF_RANGE;
        case Errc::io_error: return FFC_ERR_IO;
        case Errc::internal_error: return FFC_ERR_INTERNAL;
    }
    return FFC_ERR_INTERNAL;
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
ffc_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return FFC_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return FFC_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return FFC_ERR_INTERNAL;
    }
}

ffc_status require(bool ok, const char* message) {
    if (ok) return FFC_OK;
    g_last_error = message;
    return FFC_ERR_INVALID_ARGUMENT;
}

ffc_status render(const Json& report, const char* format, char** out) {
    const std::string fmt = format == nullptr ? "json" : format;
    if (fmt == "json") {
        *out = dup_string(report.dump(2) + "\n");
        return FFC_OK;
    }
    if (fmt == "csv") {
        *out = dup_string(report_to_csv(report));
        return FFC_OK;
    }
    g_last_error = "format must be json or csv";
    return FFC_ERR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* ffc_version(void) { return kVersion; }

const char* ffc_status_name(ffc_status status) {
    switch (status) {
        case FFC_OK: return "ok";
        case FFC_ERR_INVALID_ARGUMENT: return "invalid_argument";
        case FFC_ERR_PARSE: return "parse_error";
        case FFC_ERR_DIVISION_BY_ZERO: return "division_by_zero";
        case FFC_ERR_FIELD_MISMATCH: return "field_mismatch";
        case FFC_ERR_CHARACTERISTIC_MISMATCH: return "characteristic_mismatch";
        case FFC_ERR_RESOURCE_LIMIT: return "resource_limit";
        case FFC_ERR_CONSTANT_INPUT: return "constant_input";
        case FFC_ERR_ZERO_INPUT: return "zero_input";
        case FFC_ERR_NOT_MONIC: return "not_monic";
        case FFC_ERR_ZERO_DENOMINATOR: return "zero_denominator";
        case FFC_ERR_NO_APPROXIMANT: return "no_approximant";
        case FFC_ERR_SCALAR_SUM_NOT_ONE: return "scalar_sum_not_one";
        case FFC_ERR_PRECONDITION: return "precondition_violated";
        case FFC_ERR_DEGREE_TOO_SMALL: return "degree_too_small";
        case FFC_ERR_FILE_FORMAT: return "file_format";
        case FFC_ERR_SIZE_TOO_LARGE: return "size_too_large";
        case FFC_ERR_NO_VALID_SCALARS: return "no_valid_scalars";
        case FFC_ERR_J_OUT_OF_RANGE: return "j_out_of_range";
        case FFC_ERR_IO: return "io_error";
        case FFC_ERR_INTERNAL: return "internal_error";
    }
    return "unknown";
}

const char* ffc_last_error(void) { return g_last_error.c_str(); }

void ffc_string_free(char* s) { delete[] s; }

ffc_status ffc_field_create(const char* spec, ffc_field** out) {
    if (auto st = require(spec && out, "null argument")) return st;
    return guarded([&] { *out = new ffc_field{FieldDesc::from_spec(spec)}; });
}

void ffc_field_free(ffc_field* field) { delete field; }

ffc_status ffc_field_props(const ffc_field* field, uint32_t* p, uint32_t* d, uint64_t* q) {
    if (auto st = require(field != nullptr, "null field")) return st;
    if (p) *p = field->impl->p();
    if (d) *d = field->impl->d();
    if (q) *q = field->impl->q();
    return FFC_OK;
}

ffc_status ffc_field_spec(const ffc_field* field, char** out) {
    if (auto st = require(field && out, "null argument")) return st;
    return guarded([&] { *out = dup_string(field->impl->spec()); });
}

ffc_status ffc_elem_arith(const ffc_field* field, ffc_elem_op op, uint32_t a, uint32_t b,
                          uint32_t* out) {
    if (auto st = require(field && out, "null argument")) return st;
    return guarded([&] {
        const FieldDesc& f = *field->impl;
        if (a >= f.q() || (op <= FFC_ELEM_MUL && b >= f.q()))
            fail(Errc::invalid_argument, "element index out of range");
        switch (op) {
            case FFC_ELEM_ADD: *out = f.add(a, b); break;
            case FFC_ELEM_SUB: *out = f.sub(a, b); break;
            case FFC_ELEM_MUL: *out = f.mul(a, b); break;
            case FFC_ELEM_INV: *out = f.inv(a); break;
            case FFC_ELEM_NEG: *out = f.neg(a); break;
            default: fail(Errc::invalid_argument, "unknown element op");
        }
    });
}

ffc_status ffc_elem_trace(const ffc_field* field, uint32_t a, uint32_t* out) {
    if (auto st = require(field && out, "null argument")) return st;
    return guarded([&] {
        if (a >= field->impl->q()) fail(Errc::invalid_argument, "element index out of range");
        *out = field->impl->trace(a);
    });
}

ffc_status ffc_elem_psi(const ffc_field* field, uint32_t a, int64_t* coeffs) {
    if (auto st = require(field && coeffs, "null argument")) return st;
    return guarded([&] {
        if (a >= field->impl->q()) fail(Errc::invalid_argument, "element index out of range");
        const CycloValue v = psi(field->impl->element(a));
        for (std::uint32_t i = 0; i < field->impl->p(); ++i) coeffs[i] = v.coeffs()[i];
    });
}

ffc_status ffc_poly_parse(const ffc_field* field, const char* text, ffc_poly** out) {
    if (auto st = require(field && text && out, "null argument")) return st;
    return guarded([&] { *out = new ffc_poly{Poly::parse(field->impl, text)}; });
}

void ffc_poly_free(ffc_poly* a) { delete a; }

ffc_status ffc_poly_to_string(const ffc_poly* a, char** out) {
    if (auto st = require(a && out, "null argument")) return st;
    return guarded([&] { *out = dup_string(a->impl.str()); });
}

ffc_status ffc_poly_degree(const ffc_poly* a, int64_t* out) {
    if (auto st = require(a && out, "null argument")) return st;
    *out = a->impl.deg();
    return FFC_OK;
}

ffc_status ffc_poly_arith(ffc_poly_op op, const ffc_poly* a, const ffc_poly* b, ffc_poly** out) {
    if (auto st = require(a && b && out, "null argument")) return st;
    return guarded([&] {
        switch (op) {
            case FFC_POLY_ADD: *out = new ffc_poly{a->impl + b->impl}; break;
            case FFC_POLY_SUB: *out = new ffc_poly{a->impl - b->impl}; break;
            case FFC_POLY_MUL: *out = new ffc_poly{a->impl * b->impl}; break;
            case FFC_POLY_DIV: *out = new ffc_poly{a->impl / b->impl}; break;
            case FFC_POLY_MOD: *out = new ffc_poly{a->impl % b->impl}; break;
            case FFC_POLY_GCD: *out = new ffc_poly{gcd(a->impl, b->impl)}; break;
            default: fail(Errc::invalid_argument, "unknown polynomial op");
        }
    });
}

ffc_status ffc_poly_is_irreducible(const ffc_poly* a, int* out) {
    if (auto st = require(a && out, "null argument")) return st;
    return guarded([&] { *out = is_irreducible(a->impl) ? 1 : 0; });
}

ffc_status ffc_poly_factorize(const ffc_poly* a, char** json_out) {
    if (auto st = require(a && json_out, "null argument")) return st;
    return guarded([&] {
        const Factorization fac = factorize(a->impl);
        Json j;
        j["unit"] = fac.unit.index();
        Json factors = Json::array();
        for (const auto& [p, e] : fac.factors)
            factors.push_back(Json{{"poly", p.str()}, {"multiplicity", e}});
        j["factors"] = std::move(factors);
        *json_out = dup_string(j.dump());
    });
}

ffc_status ffc_poly_mobius(const ffc_poly* a, int* out) {
    if (auto st = require(a && out, "null argument")) return st;
    return guarded([&] { *out = mobius(a->impl); });
}

ffc_status ffc_poly_lambda(const ffc_poly* a, int64_t* out) {
    if (auto st = require(a && out, "null argument")) return st;
    return guarded([&] { *out = lambda_deg(a->impl); });
}

ffc_status ffc_poly_phi(const ffc_poly* a, uint64_t* out) {
    if (auto st = require(a && out, "null argument")) return st;
    return guarded([&] { *out = phi_count(a->impl); });
}

ffc_status ffc_poly_max_irred_degree(const ffc_poly* a, int64_t* out) {
    if (auto st = require(a && out, "null argument")) return st;
    return guarded([&] { *out = max_irred_degree(a->impl); });
}

ffc_status ffc_count_irreducibles(const ffc_field* field, int64_t n, uint64_t* out) {
    if (auto st = require(field && out, "null argument")) return st;
    return guarded([&] { *out = count_irreducibles(*field->impl, static_cast<int>(n)); });
}

ffc_status ffc_run_approx(const char* field_spec, const char* xi, int64_t n, const char* convention,
                          const char* format, char** out) {
    if (auto st = require(field_spec && xi && out, "null argument")) return st;
    return guarded([&] {
        const Json report = approx_report(field_spec, xi, static_cast<int>(n),
                                          convention == nullptr ? "floor" : convention);
        if (render(report, format, out) != FFC_OK)
            throw Error(Errc::invalid_argument, g_last_error);
    });
}

ffc_status ffc_run_count_classes(const char* field_spec, int64_t n, int64_t ell, const char* h,
                                 const char* format, uint64_t cap, char** out) {
    if (auto st = require(field_spec && h && out, "null argument")) return st;
    return guarded([&] {
        const Json report = count_classes_report(field_spec, static_cast<int>(n),
                                                 static_cast<int>(ell), h, cap);
        if (render(report, format, out) != FFC_OK)
            throw Error(Errc::invalid_argument, g_last_error);
    });
}

ffc_status ffc_run_bounds(const char* lemma, const char* grid, const char* format, uint64_t seed,
                          uint64_t cap, char** out) {
    if (auto st = require(lemma && out, "null argument")) return st;
    return guarded([&] {
        const Json report = bounds_report(lemma, grid == nullptr ? "default" : grid, seed, cap);
        if (render(report, format, out) != FFC_OK)
            throw Error(Errc::invalid_argument, g_last_error);
    });
}

ffc_status ffc_run_correlate(const char* field_spec, int64_t n, int64_t j, int64_t alpha,
                             int64_t beta, const char* set_a, const char* set_b, const char* format,
                             uint64_t seed, uint64_t cap, int include_tables, char** out) {
    if (auto st = require(field_spec && set_a && set_b && out, "null argument")) return st;
    return guarded([&] {
        std::optional<std::uint32_t> a, b;
        if (alpha >= 0) a = static_cast<std::uint32_t>(alpha);
        if (beta >= 0) b = static_cast<std::uint32_t>(beta);
        std::optional<bool> tables;
        if (include_tables == 0) tables = false;
        if (include_tables == 1) tables = true;
        const Json report = correlate_report(field_spec, static_cast<int>(n), static_cast<int>(j), a,
                                             b, set_a, set_b, seed, cap, tables);
        if (render(report, format, out) != FFC_OK)
            throw Error(Errc::invalid_argument, g_last_error);
    });
}

ffc_status ffc_run_experiment(const char* config_text, const char* format, char** out) {
    if (auto st = require(config_text && out, "null argument")) return st;
    return guarded([&] {
        const Json report = experiment_report(ExperimentConfig::from_kv_text(config_text));
        if (render(report, format, out) != FFC_OK)
            throw Error(Errc::invalid_argument, g_last_error);
    });
}

ffc_status ffc_run_verify(const char* level, const char* format, uint64_t seed, uint64_t cap,
                          int* all_pass, char** out) {
    if (auto st = require(out != nullptr, "null argument")) return st;
    return guarded([&] {
        const std::string lvl = level == nullptr ? "quick" : level;
        VerifyLevel vl;
        if (lvl == "quick")
            vl = VerifyLevel::quick;
        else if (lvl == "full")
            vl = VerifyLevel::full;
        else
            fail(Errc::invalid_argument, "level must be quick or full: " + lvl);
        const Json report = verify_report(vl, seed, cap);
        if (all_pass) *all_pass = report["all_pass"].get<bool>() ? 1 : 0;
        if (render(report, format, out) != FFC_OK)
            throw Error(Errc::invalid_argument, g_last_error);
    });
}

}  // extern "C"
