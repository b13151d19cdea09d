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

#ifndef FFC_CIRCLE_HPP
#define FFC_CIRCLE_HPP

#include <optional>
#include <vector>

#include "dioph.hpp"
#include "factor.hpp"
#include "laurent.hpp"

namespace ffc {

/**
 * Subset of M_n as a membership bitmap indexed by monic index (coefficient
 * vector as a base-q integer, constant term least significant), giving O(1)
 * membership for the representation-count inner loops.
 */
class PolySet {
   public:
    static PolySet empty(FieldDesc::Ptr field, int n, const ResourceCap& cap = {});
    static PolySet all(FieldDesc::Ptr field, int n, const ResourceCap& cap = {});
    /// Exact-size uniform subset: seeded partial Fisher-Yates over indices.
    static PolySet random_subset(FieldDesc::Ptr field, int n, std::uint64_t size, std::uint64_t seed,
                                 const ResourceCap& cap = {});

    const FieldDesc& field() const { return *f_; }
    const FieldDesc::Ptr& field_ptr() const { return f_; }
    int degree() const { return n_; }
    std::uint64_t size() const { return card_; }
    std::uint64_t universe() const { return bits_.size(); }

    bool contains_index(std::uint64_t idx) const { return bits_[idx]; }
    bool contains(const Poly& a) const;
    void insert_index(std::uint64_t idx);
    /// Inserts a monic polynomial of the set's degree; returns false if it
    /// was already present.
    bool insert(const Poly& a);

    /// Member indices in increasing order.
    std::vector<std::uint64_t> indices() const;

   private:
    PolySet(FieldDesc::Ptr field, int n, std::uint64_t universe)
        : f_(std::move(field)), n_(n), bits_(universe, false), card_(0) {}

    FieldDesc::Ptr f_;
    int n_;
    std::vector<bool> bits_;
    std::uint64_t card_;
};

/// Representations g = alpha*a + beta*b with (a, b) in A x B. Requires
/// alpha, beta nonzero and alpha + beta = 1 (otherwise no monic target is
/// attainable and the call is rejected).
std::uint64_t u_count(const Poly& g, const PolySet& A, const PolySet& B, const FieldElement& alpha,
                      const FieldElement& beta);

/// 1 iff g = C*P with C monic of degree j and P irreducible of degree
/// (deg g - j); equivalently, g has an irreducible factor of that exact degree.
int v_indicator(const Poly& g, int j);

/// #{(C, P): C in M_j, P in I_{n-j}, CP agrees with h in the first n-k
/// coefficients}; j = n - k.
std::uint64_t w_count(const Poly& h, int j, int k, const ResourceCap& cap = {});

/// sum over members s of e(scalar * s * xi), exactly.
CycloValue f_set_eval(const LaurentPoint& xi, const PolySet& S, const FieldElement& scalar,
                      const ResourceCap& cap = {});
CycloValue f_set_eval(const LaurentPoint& xi, const std::vector<Poly>& S, const FieldElement& scalar);

/// sum over M_k of e(A*xi): q^k * e(T^k xi) when ||xi|| < q^-k, else 0.
CycloValue geometric_sum_closed_form(const LaurentPoint& xi, int k);

struct CorrelationReport {
    int n = 0;
    int j = 0;
    int k = 0;
    int threshold = 0;                 // n - j
    std::uint64_t card_a = 0;
    std::uint64_t card_b = 0;
    std::uint64_t correlation = 0;     // I = sum u_G v_G
    Rational i1;                       // q^-k sum u_G w_G
    Rational i2;                       // I - I1
    std::uint64_t sum_u = 0;           // = #A * #B
    std::uint64_t pair_count = 0;      // sum of u_G over G with D(G) >= n - j
    std::vector<std::uint64_t> u;      // per-G tables, indexed by monic index
    std::vector<std::uint8_t> v;
    std::vector<std::uint64_t> w;
};

/// The exact correlation I = sum u_G v_G and its split I = I1 + I2, all
/// through the combinatorial identities (no quadrature anywhere).
CorrelationReport correlation(const PolySet& A, const PolySet& B, const FieldElement& alpha,
                              const FieldElement& beta, int j, const ResourceCap& cap = {});

/// Real degree cutoffs for the Vaughan decomposition; both must exceed 1.
struct VaughanParams {
    double y;
    double z;
    /// The choice y = z = 2n/5 under which the decomposition is applied to
    /// degree-n sums (valid once n >= 3).
    static VaughanParams proof_preset(int n) { return {0.4 * n, 0.4 * n}; }
};

/// The three divisor sums of the Vaughan decomposition, fully enumerated;
/// lambda = term1 - term2 + term3 must hold exactly for deg F > z.
struct VaughanTerms {
    int lambda;
    long long term1;
    long long term2;
    long long term3;
};
VaughanTerms vaughan_check(const Poly& F, double y, double z);
inline VaughanTerms vaughan_check(const Poly& F, const VaughanParams& params) {
    return vaughan_check(F, params.y, params.z);
}

struct BoundCheck {
    double lhs;
    double rhs;       // the bound shape evaluated with constant 1
    double ratio;     // lhs / rhs
};

/// LHS = sum over G in M_ell of |sum over H in M_k of e(xi G H)| against
/// q^(k+ell)/|B| + q^ell + |B|. xi must decompose as A/B + gamma with
/// gcd(A,B) = 1, B monic nonconstant, |gamma| <= |B|^-2.
BoundCheck bilinear_bound_check(const LaurentPoint& xi, const Poly& A, const Poly& B, int k, int ell,
                                const ResourceCap& cap = {});

/// LHS = |sum over P in I_n of e(xi P)| against
/// n^(3/2) (q^n/|B|^(1/2) + q^(4n/5) + |B|^(1/2) q^((n+1)/2)).
BoundCheck irred_sum_bound_check(const LaurentPoint& xi, const Poly& A, const Poly& B, int n,
                                 const ResourceCap& cap = {});

struct FsSampleSpec {
    std::uint64_t count = 16;
    std::uint64_t seed = 1;
    int max_den_degree = 4;
};

struct FsSample {
    LaurentPoint xi;
    double fs_abs;
    double bound;
    double ratio;
};

struct FsBoundReport {
    int n;
    int j;
    int k;
    bool hypothesis_holds;             // 1 <= j < n/7 - 4 log_q n - 3/7 (truncated log)
    bool k_condition_holds;            // k <= n - j/2
    bool bound_vacuous;                // j = 1 makes log j = 0
    std::vector<FsSample> samples;     // only points with |xi| >= q^-k
    std::uint64_t rejected = 0;        // sampled points outside the domain
    double max_ratio = 0.0;
};

/// |f_S| against (log j / n) q^(n-j) on sampled rational points with
/// |xi| >= q^-k. Desk-scale n never satisfies the source hypothesis; the
/// report records its status instead of enforcing it.
FsBoundReport fs_bound_check(FieldDesc::Ptr field, int n, int j, int k, const FsSampleSpec& spec,
                             const ResourceCap& cap = {});

}  // namespace ffc

#endif
