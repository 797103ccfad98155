#pragma once

#include "reesolve/rational.hpp"

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace rees {

// Exponent vector of a monomial; the length equals the chart dimension.
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(int dim) : e(dim, 0) {}
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

    int dim() const { return static_cast<int>(e.size()); }
    int degree() const {
        int s = 0;
        for (int k : e) s += k;
        return s;
    }
    bool divides(const Monomial& m) const {
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }
    bool operator==(const Monomial& o) const { return e == o.e; }
};

// Graded lexicographic order with earlier variables more significant.
// Total degree decides first; ties go to the lexicographically larger
// exponent vector.
bool grlex_less(const Monomial& a, const Monomial& b);

struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_less(a, b); }
};

struct PointQ {
    std::vector<Rat> coords;

    PointQ() = default;
    explicit PointQ(std::vector<Rat> c) : coords(std::move(c)) {}
    static PointQ origin(int dim) { return PointQ(std::vector<Rat>(dim, Rat(0))); }

    int dim() const { return static_cast<int>(coords.size()); }
    bool is_origin() const {
        for (const Rat& c : coords)
            if (c != 0) return false;
        return true;
    }
    bool operator==(const PointQ& o) const { return coords == o.coords; }
    bool operator<(const PointQ& o) const { return coords < o.coords; }
};

// Sparse multivariate polynomial over Q in canonical form: a term map under
// the graded-lex order, never holding a zero coefficient.
class Poly {
  public:
    using TermMap = std::map<Monomial, Rat, GrlexLess>;

    Poly() : dim_(0) {}
    explicit Poly(int dim) : dim_(dim) {}

    static Poly zero(int dim) { return Poly(dim); }
    static Poly constant(int dim, const Rat& c);
    static Poly variable(int dim, int i);
    static Poly term(const Monomial& m, const Rat& c);

    int dim() const { return dim_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    int total_degree() const;  // -1 for the zero polynomial

    const Monomial& leading_monomial() const;
    const Rat& leading_coeff() const;
    Rat coeff(const Monomial& m) const;

    void add_term(const Monomial& m, const Rat& c);

    Poly operator-() const;
    Poly operator+(const Poly& g) const;
    Poly operator-(const Poly& g) const;
    Poly operator*(const Poly& g) const;
    Poly scaled(const Rat& c) const;
    Poly pow(int k) const;

    bool operator==(const Poly& g) const { return dim_ == g.dim_ && terms_ == g.terms_; }
    bool operator!=(const Poly& g) const { return !(*this == g); }
    bool operator<(const Poly& g) const;  // arbitrary total order for canonical sorting

    Rat eval(const PointQ& p) const;

    // Divided-power Taylor coefficient: term-wise binomial shift.
    Poly delta(const Monomial& alpha) const;

    // Order at a rational point: translate p to the origin and take the
    // minimal total degree of a surviving term. nullopt encodes infinity.
    std::optional<int> order_at(const PointQ& p) const;

    // Minimal S-degree over the terms (order at the generic point of
    // V(x_j : j in S)). nullopt for the zero polynomial.
    std::optional<int> order_along(const std::set<int>& vars) const;

    // Substitution x_i -> images[i]; images live in a ring of dimension
    // images[0].dim() (which may differ from dim()).
    Poly substitute(const std::vector<Poly>& images) const;

    // Translation x_i -> x_i + p_i.
    Poly shifted(const PointQ& p) const;

    // Exact division by the monomial prod x_i^{m.e[i]}; throws when not divisible.
    Poly divide_by_monomial(const Monomial& m) const;

    // Remove variable `var` (which must not occur) and drop to dimension-1 lower.
    Poly drop_variable(int var) const;

    // Collect coefficients with respect to one variable: result[k] is the
    // coefficient polynomial of var^k (in the full-dimensional ring, with
    // var-exponent zeroed).
    std::vector<Poly> coeffs_in_variable(int var) const;

    std::string str(const std::vector<std::string>& names) const;

  private:
    int dim_;
    TermMap terms_;

    void check_dim(const Poly& g) const {
        if (dim_ != g.dim_) throw std::invalid_argument("polynomial dimension mismatch");
    }
};

// n-choose-k as an exact integer (small n).
Int binomial(int n, int k);

// All exponent vectors of the given dimension and exact total degree,
// listed in graded-lex descending order (x1-heavy first).
std::vector<Monomial> monomials_of_degree(int dim, int deg);

}  // namespace rees
