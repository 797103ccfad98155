#include "reesolve/poly.hpp"

#include <algorithm>
#include <sstream>

namespace rees {

bool grlex_less(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    // Same degree: a < b when a is lexicographically smaller.
    return a.e < b.e;
}

Poly Poly::constant(int dim, const Rat& c) {
    Poly f(dim);
    if (c != 0) f.terms_[Monomial(dim)] = c;
    return f;
}

Poly Poly::variable(int dim, int i) {
    Poly f(dim);
    Monomial m(dim);
    m.e[i] = 1;
    f.terms_[m] = Rat(1);
    return f;
}

Poly Poly::term(const Monomial& m, const Rat& c) {
    Poly f(m.dim());
    if (c != 0) f.terms_[m] = c;
    return f;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

int Poly::total_degree() const {
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.degree();
}

const Monomial& Poly::leading_monomial() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.rbegin()->first;
}

const Rat& Poly::leading_coeff() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.rbegin()->second;
}

Rat Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    if (m.dim() != dim_) throw std::invalid_argument("monomial dimension mismatch");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(dim_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

Poly Poly::operator+(const Poly& g) const {
    check_dim(g);
    Poly r = *this;
    for (const auto& [m, c] : g.terms_) r.add_term(m, c);
    return r;
}

Poly Poly::operator-(const Poly& g) const {
    check_dim(g);
    Poly r = *this;
    for (const auto& [m, c] : g.terms_) r.add_term(m, -c);
    return r;
}

Poly Poly::operator*(const Poly& g) const {
    check_dim(g);
    Poly r(dim_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : g.terms_) {
            Monomial m(dim_);
            for (int i = 0; i < dim_; ++i) m.e[i] = ma.e[i] + mb.e[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

Poly Poly::scaled(const Rat& c) const {
    Poly r(dim_);
    if (c == 0) return r;
    for (const auto& [m, cf] : terms_) r.terms_[m] = cf * c;
    return r;
}

Poly Poly::pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative power");
    Poly r = Poly::constant(dim_, Rat(1));
    Poly base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

bool Poly::operator<(const Poly& g) const {
    if (dim_ != g.dim_) return dim_ < g.dim_;
    auto a = terms_.rbegin(), b = g.terms_.rbegin();
    for (; a != terms_.rend() && b != g.terms_.rend(); ++a, ++b) {
        if (grlex_less(a->first, b->first)) return true;
        if (grlex_less(b->first, a->first)) return false;
        if (a->second != b->second) return a->second < b->second;
    }
    return a == terms_.rend() && b != g.terms_.rend();
}

Rat Poly::eval(const PointQ& p) const {
    if (p.dim() != dim_) throw std::invalid_argument("point dimension mismatch");
    Rat total(0);
    for (const auto& [m, c] : terms_) {
        Rat v = c;
        for (int i = 0; i < dim_; ++i) {
            for (int k = 0; k < m.e[i]; ++k) v *= p.coords[i];
        }
        total += v;
    }
    return total;
}

Int binomial(int n, int k) {
    if (k < 0 || k > n) return Int(0);
    Int r(1);
    for (int i = 0; i < k; ++i) {
        r *= Int(n - i);
        r /= Int(i + 1);
    }
    return r;
}

Poly Poly::delta(const Monomial& alpha) const {
    if (alpha.dim() != dim_) throw std::invalid_argument("alpha dimension mismatch");
    Poly r(dim_);
    for (const auto& [m, c] : terms_) {
        if (!alpha.divides(m)) continue;
        Rat cf = c;
        Monomial q(dim_);
        for (int i = 0; i < dim_; ++i) {
            q.e[i] = m.e[i] - alpha.e[i];
            cf *= Rat(binomial(m.e[i], alpha.e[i]));
        }
        r.add_term(q, cf);
    }
    return r;
}

std::optional<int> Poly::order_at(const PointQ& p) const {
    if (is_zero()) return std::nullopt;
    Poly g = p.is_origin() ? *this : shifted(p);
    if (g.is_zero()) return std::nullopt;
    return g.terms_.begin()->first.degree();
}

std::optional<int> Poly::order_along(const std::set<int>& vars) const {
    if (is_zero()) return std::nullopt;
    int best = -1;
    for (const auto& [m, c] : terms_) {
        (void)c;
        int s = 0;
        for (int j : vars) s += m.e[j];
        if (best < 0 || s < best) best = s;
    }
    return best;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
    if (static_cast<int>(images.size()) != dim_)
        throw std::invalid_argument("substitution arity mismatch");
    int outdim = dim_ == 0 ? 0 : images[0].dim();
    Poly r(outdim);
    // Cache variable powers as needed.
    std::vector<std::vector<Poly>> pows(dim_);
    for (int i = 0; i < dim_; ++i) pows[i].push_back(Poly::constant(outdim, Rat(1)));
    auto power = [&](int i, int k) -> const Poly& {
        while (static_cast<int>(pows[i].size()) <= k) pows[i].push_back(pows[i].back() * images[i]);
        return pows[i][k];
    };
    for (const auto& [m, c] : terms_) {
        Poly t = Poly::constant(outdim, c);
        for (int i = 0; i < dim_; ++i) {
            if (m.e[i] > 0) t = t * power(i, m.e[i]);
        }
        r = r + t;
    }
    return r;
}

Poly Poly::shifted(const PointQ& p) const {
    std::vector<Poly> images;
    images.reserve(dim_);
    for (int i = 0; i < dim_; ++i) {
        Poly im = Poly::variable(dim_, i);
        im.add_term(Monomial(dim_), p.coords[i]);
        images.push_back(im);
    }
    return substitute(images);
}

Poly Poly::divide_by_monomial(const Monomial& m) const {
    Poly r(dim_);
    for (const auto& [mm, c] : terms_) {
        if (!m.divides(mm)) throw std::domain_error("monomial division is not exact");
        Monomial q(dim_);
        for (int i = 0; i < dim_; ++i) q.e[i] = mm.e[i] - m.e[i];
        r.terms_[q] = c;
    }
    return r;
}

Poly Poly::drop_variable(int var) const {
    Poly r(dim_ - 1);
    for (const auto& [m, c] : terms_) {
        if (m.e[var] != 0) throw std::logic_error("drop_variable: variable still occurs");
        Monomial q(dim_ - 1);
        int k = 0;
        for (int i = 0; i < dim_; ++i) {
            if (i == var) continue;
            q.e[k++] = m.e[i];
        }
        r.terms_[q] = c;
    }
    return r;
}

std::vector<Poly> Poly::coeffs_in_variable(int var) const {
    int maxk = 0;
    for (const auto& [m, c] : terms_) {
        (void)c;
        maxk = std::max(maxk, m.e[var]);
    }
    std::vector<Poly> out(static_cast<size_t>(maxk) + 1, Poly(dim_));
    for (const auto& [m, c] : terms_) {
        Monomial q = m;
        q.e[var] = 0;
        out[m.e[var]].add_term(q, c);
    }
    return out;
}

std::string Poly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Print leading (grlex-largest) terms first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Monomial& m = it->first;
        Rat c = it->second;
        bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        Rat a = neg ? Rat(-c) : c;
        bool hasvars = m.degree() > 0;
        if (a != 1 || !hasvars) {
            os << rat_to_string(a);
            if (hasvars) os << "*";
        }
        bool firstvar = true;
        for (int i = 0; i < dim_; ++i) {
            if (m.e[i] == 0) continue;
            if (!firstvar) os << "*";
            firstvar = false;
            os << names[i];
            if (m.e[i] > 1) os << "^" << m.e[i];
        }
    }
    return os.str();
}

std::vector<Monomial> monomials_of_degree(int dim, int deg) {
    std::vector<Monomial> out;
    Monomial cur(dim);
    // Recursive enumeration, first variable taking the largest exponent first.
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == dim - 1) {
            cur.e[pos] = rem;
            out.push_back(cur);
            return;
        }
        for (int k = rem; k >= 0; --k) {
            cur.e[pos] = k;
            self(self, pos + 1, rem - k);
        }
        cur.e[pos] = 0;
    };
    if (dim == 0) {
        if (deg == 0) out.push_back(Monomial(0));
        return out;
    }
    rec(rec, 0, deg);
    return out;
}

// ---- rational root extraction ----------------------------------------------

namespace {

// Divisors of |n| by trial division; empty optional when n exceeds the budget.
std::optional<std::vector<Int>> divisors_of(Int n) {
    if (n < 0) n = -n;
    if (n == 0) return std::vector<Int>{};
    if (n > Int("1000000000000")) return std::nullopt;
    std::vector<Int> primes, mult;
    Int m = n;
    // n <= 1e12 bounds the trial divisor by 1e6.
    for (Int p(2); p * p <= m; ++p) {
        if (m % p == 0) {
            int k = 0;
            while (m % p == 0) {
                m /= p;
                ++k;
            }
            primes.push_back(p);
            mult.push_back(Int(k));
        }
    }
    if (m > 1) {
        primes.push_back(m);
        mult.push_back(Int(1));
    }
    std::vector<Int> divs{Int(1)};
    for (size_t i = 0; i < primes.size(); ++i) {
        size_t sz = divs.size();
        Int pk(1);
        for (Int k(1); k <= mult[i]; ++k) {
            pk *= primes[i];
            for (size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

Rat eval_uni(const std::vector<Rat>& c, const Rat& t) {
    Rat v(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * t + *it;
    return v;
}

// Synthetic division by (t - r); requires r to be a root.
std::vector<Rat> deflate(const std::vector<Rat>& c, const Rat& r) {
    std::vector<Rat> q(c.size() - 1, Rat(0));
    Rat carry(0);
    for (size_t i = c.size() - 1; i >= 1; --i) {
        carry = c[i] + carry * r;
        q[i - 1] = carry;
    }
    return q;
}

}  // namespace

std::optional<std::vector<std::pair<Rat, int>>> rational_roots(const std::vector<Rat>& coeffs) {
    std::vector<Rat> c = coeffs;
    while (!c.empty() && c.back() == 0) c.pop_back();
    std::vector<std::pair<Rat, int>> roots;
    if (c.size() <= 1) return roots;  // constant (or zero handled by caller)

    // Factor out t^k.
    int zero_mult = 0;
    while (!c.empty() && c.front() == 0) {
        c.erase(c.begin());
        ++zero_mult;
    }
    if (zero_mult > 0) roots.push_back({Rat(0), zero_mult});

    // Scale to integer coefficients.
    Int den(1);
    for (const Rat& a : c) den = int_lcm(den, rat_den(a));
    std::vector<Int> ic;
    ic.reserve(c.size());
    for (const Rat& a : c) ic.push_back(rat_num(a) * (den / rat_den(a)));

    if (ic.size() >= 2) {
        auto d0 = divisors_of(ic.front());
        auto dl = divisors_of(ic.back());
        if (!d0 || !dl) return std::nullopt;
        std::vector<Rat> candidates;
        for (const Int& p : *d0) {
            for (const Int& q : *dl) {
                Rat r(p, q);
                candidates.push_back(r);
                candidates.push_back(-r);
            }
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (const Rat& r : candidates) {
            if (eval_uni(c, r) != 0) continue;
            int mult = 0;
            while (c.size() > 1 && eval_uni(c, r) == 0) {
                c = deflate(c, r);
                ++mult;
            }
            if (mult > 0) roots.push_back({r, mult});
        }
    }
    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return roots;
}

}  // namespace rees
