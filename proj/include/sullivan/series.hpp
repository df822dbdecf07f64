#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sullivan/algebra.hpp"
#include "sullivan/rational.hpp"

namespace sullivan {

class CohomologyTable;

// Exact Laurent polynomial in one variable t (finite support, integer
// exponents of either sign).
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly monomial(int exp, const Rat& c = Rat(1));
    static LaurentPoly one() { return monomial(0); }
    static LaurentPoly one_minus_power(int d);  // 1 - t^d

    const std::map<int, Rat>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    Rat at(int exp) const;
    int min_exp() const;  // throws on zero
    int max_exp() const;

    LaurentPoly operator+(const LaurentPoly&) const;
    LaurentPoly operator-(const LaurentPoly&) const;
    LaurentPoly operator*(const LaurentPoly&) const;
    LaurentPoly scaled(const Rat&) const;
    LaurentPoly shifted(int k) const;    // * t^k
    LaurentPoly reversed() const;        // t -> 1/t
    bool operator==(const LaurentPoly&) const;
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Exact division; nullopt if the divisor does not divide exactly.
    std::optional<LaurentPoly> divided_by(const LaurentPoly& divisor) const;

    // Multiplicity of the root t = 1.
    int multiplicity_at_one() const;

    Rat evaluate_at_one() const;
    std::string to_string() const;  // e.g. "1 + t^2 - t^4", "t^-2"

    void add(int exp, const Rat& c);

private:
    std::map<int, Rat> coeffs_;
};

// Truncated series: exact coefficients on [lo, hi], identically zero below lo.
class LaurentSeries {
public:
    LaurentSeries() = default;
    LaurentSeries(int lo, int hi) : lo_(lo), hi_(hi) {}

    int lo() const { return lo_; }
    int hi() const { return hi_; }
    Rat at(int n) const;
    void set(int n, const Rat& c);

    LaurentSeries operator+(const LaurentSeries&) const;  // window intersection
    LaurentSeries operator-(const LaurentSeries&) const;
    // Multiply by a Laurent polynomial with non-negative exponents; exact on
    // the same window because the series vanishes below lo.
    LaurentSeries times_poly(const LaurentPoly&) const;
    bool operator==(const LaurentSeries&) const;

    std::string to_string() const;

private:
    int lo_ = 0, hi_ = -1;
    std::map<int, Rat> coeffs_;
};

// Closed form numerator / prod_i (1 - t^{d_i}); expansion matches the source
// series on its whole window.
struct RationalSeriesForm {
    LaurentPoly numerator;
    std::vector<int> denominator_degrees;  // multiset, each >= 1

    LaurentSeries expand(int lo, int hi) const;
    // Pole order at t = 1 (denominator factors minus numerator multiplicity).
    int pole_order_at_one() const;
    std::string to_string() const;
};

bool forms_equal(const RationalSeriesForm& a, const RationalSeriesForm& b);

LaurentSeries hilbert_series(const CohomologyTable& table);

// Cochain-level dimension series: coefficient at n is |basis(n)|.
LaurentSeries truncated_dimension_series(const GeneratorSet& gens, int max_codegree);

enum class FitVerdict { Success, Refusal, Inconclusive };
struct FitResult {
    FitVerdict verdict = FitVerdict::Inconclusive;
    std::optional<RationalSeriesForm> form;
    std::string note;
};
FitResult rational_fit(const LaurentSeries& series, const std::vector<int>& denominator_degrees);

// Gorenstein functional equations at the Hilbert-series level. defect 0 means
// p(1/t) = (-t)^r t^a p(t) exactly; defect 1 means the Benson-Carlson pair
// p(1/t) - (-t)^r t^a p(t) = (-1)^{r-1}(1+t) delta(t) and
// delta(1/t) = (-t)^{r-1} t^{-a} delta(t). Two normalizations of the second
// equation circulate (t^{-a} vs t^{+a}); the verdict's note records which one
// is verified.
struct DualityVerdict {
    enum class Kind { Defect0, Defect1, None } kind = Kind::None;
    int defect = -1;
    int r = 0;
    long a = 0;
    // delta = delta_num / ((1+t) * prod_i (1 - t^{delta_den_i}));
    // delta_reduced is set when that denominator divides out exactly (the
    // usual case in examples).
    LaurentPoly delta_num;
    std::vector<int> delta_den;
    std::optional<LaurentPoly> delta_reduced;
    bool second_equation_verified = false;
    std::string convention_note;
};
DualityVerdict functional_check(const RationalSeriesForm& form);

// Milnor-Moore/PBW loop homology series: L_n has dimension dim V^{n+1};
// series = prod_{n even} (1-t^n)^{-dim L_n} * prod_{n odd} (1+t^n)^{dim L_n}.
LaurentSeries loop_homology_series(const SullivanAlgebra& algebra, int max_degree);

struct GrowthReport {
    int growth_degree = -1;  // -1 when the series is eventually zero in-window
    bool conclusive = false;
    Rat bound_constant;  // witness: coeff_n <= C * (n+1)^d on the window
    std::string note;
};
GrowthReport growth_degree(const LaurentSeries& series);

// True iff h_M <= h_N * (1 + t^n + t^{2n} + ...) coefficientwise on the
// shared window; n != 0.
bool growth_bound_check(const LaurentSeries& h_m, const LaurentSeries& h_n, int n);

// Theorem-level Hochschild series prediction for an sci model with odd sphere
// codegrees n_i: pX * prod_i (1 - t^{n_i - 1})^{-1}. Prediction only.
RationalSeriesForm hochschild_series_prediction(const RationalSeriesForm& p_x,
                                                const std::vector<int>& sphere_codegrees);

}  // namespace sullivan
