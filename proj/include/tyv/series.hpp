#pragma once

// Truncated formal series in up to three spectral variables, with
// noncommutative algebra elements as coefficients.  Exponents may be
// negative (inverse powers, the generic case) or small nonnegative powers
// (clearing polynomials).  Each series carries a valid_order D: every
// monomial of total inverse-degree <= D is exact, anything deeper is
// unknown and never stored.

#include "tyv/algebra.hpp"
#include "tyv/rational.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tyv {

class TruncatedSeries {
public:
    using Exp = std::array<int, 3>; // unused trailing slots stay 0
    static constexpr int kExactOrder = std::numeric_limits<int>::max() / 4;

    TruncatedSeries() = default; // empty placeholder; assign before use

    TruncatedSeries(const Algebra* alg, std::vector<std::string> vars, int valid_order)
        : alg_(alg), vars_(std::move(vars)), valid_order_(valid_order) {
        if (vars_.size() > 3) throw std::invalid_argument("at most 3 variables");
    }

    static int inv_deg(const Exp& e) { return -(e[0] + e[1] + e[2]); }

    const Algebra* algebra() const { return alg_; }
    const std::vector<std::string>& vars() const { return vars_; }
    int valid_order() const { return valid_order_; }
    const std::map<Exp, Element>& coefficients() const { return coef_; }
    bool is_zero() const { return coef_.empty(); }

    int var_index(const std::string& v) const {
        for (std::size_t k = 0; k < vars_.size(); ++k)
            if (vars_[k] == v) return static_cast<int>(k);
        throw std::invalid_argument("unknown variable: " + v);
    }

    // ---- construction helpers ---------------------------------------------

    static TruncatedSeries zero(const Algebra* alg, std::vector<std::string> vars,
                                int valid_order = kExactOrder) {
        return TruncatedSeries(alg, std::move(vars), valid_order);
    }

    static TruncatedSeries constant(const Algebra* alg, std::vector<std::string> vars,
                                    Element c, int valid_order = kExactOrder) {
        TruncatedSeries s(alg, std::move(vars), valid_order);
        s.add_term({0, 0, 0}, std::move(c));
        return s;
    }

    static TruncatedSeries scalar(const Algebra* alg, std::vector<std::string> vars,
                                  const Rat& c, int valid_order = kExactOrder) {
        return constant(alg, std::move(vars), Element::scalar(c), valid_order);
    }

    // c * v^power as an exact polynomial (power may be negative).
    static TruncatedSeries monomial(const Algebra* alg, std::vector<std::string> vars,
                                    const std::string& v, int power, const Rat& c = 1,
                                    int valid_order = kExactOrder) {
        TruncatedSeries s(alg, std::move(vars), valid_order);
        Exp e{0, 0, 0};
        e[s.var_index(v)] = power;
        s.add_term(e, Element::scalar(c));
        return s;
    }

    void add_term(const Exp& e, Element x) { accumulate(e, x); }

    void accumulate(const Exp& e, const Element& x, const Rat& c = 1) {
        if (inv_deg(e) > valid_order_ || x.is_zero() || c == 0) return;
        auto it = coef_.find(e);
        if (it == coef_.end()) {
            Element v = x;
            v *= c;
            if (!v.is_zero()) coef_.emplace(e, std::move(v));
        } else {
            it->second.add_scaled(x, c);
            if (it->second.is_zero()) coef_.erase(it);
        }
    }

    // Coefficient of the given exponent vector; error when the request lies
    // beyond the guaranteed order.
    const Element& coefficient(const Exp& e) const {
        if (inv_deg(e) > valid_order_)
            throw std::out_of_range("coefficient beyond valid order of truncated series");
        static const Element kZero;
        auto it = coef_.find(e);
        return it == coef_.end() ? kZero : it->second;
    }

    // Univariate convenience: coefficient of v^power.
    const Element& coefficient(const std::string& v, int power) const {
        Exp e{0, 0, 0};
        e[var_index(v)] = power;
        return coefficient(e);
    }

    // ---- ring operations ---------------------------------------------------

    TruncatedSeries& add_scaled(const TruncatedSeries& o, const Rat& c) {
        require_compatible(o);
        valid_order_ = std::min(valid_order_, o.valid_order_);
        prune();
        for (const auto& [e, x] : o.coef_) accumulate(e, x, c);
        return *this;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& o) { return add_scaled(o, 1); }
    TruncatedSeries& operator-=(const TruncatedSeries& o) { return add_scaled(o, -1); }
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }

    TruncatedSeries& operator*=(const Rat& c) {
        if (c == 0) {
            coef_.clear();
        } else {
            for (auto& [e, x] : coef_) x *= c;
        }
        return *this;
    }
    friend TruncatedSeries operator*(TruncatedSeries a, const Rat& c) { return a *= c; }
    friend TruncatedSeries operator*(const Rat& c, TruncatedSeries a) { return a *= c; }
    friend TruncatedSeries operator-(TruncatedSeries a) { return a *= Rat(-1); }

    // Smallest inverse-degree present; one past valid_order when empty.
    int floor_inv_deg() const {
        int f = sat_add(valid_order_, 1);
        for (const auto& [e, x] : coef_) f = std::min(f, inv_deg(e));
        return f;
    }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.require_compatible(b);
        int vo = std::min(order_plus_floor(a.valid_order_, b.floor_inv_deg()),
                          order_plus_floor(b.valid_order_, a.floor_inv_deg()));
        TruncatedSeries out(a.alg_, a.vars_, vo);
        for (const auto& [ea, xa] : a.coef_) {
            for (const auto& [eb, xb] : b.coef_) {
                Exp e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
                if (inv_deg(e) > vo) continue;
                out.accumulate(e, a.alg_->mul(xa, xb));
            }
        }
        return out;
    }

    // Multiplicative inverse.  Requires an invertible scalar constant term;
    // every other stored term must have positive inverse-degree.
    TruncatedSeries inverse() const {
        if (valid_order_ >= kExactOrder)
            throw std::invalid_argument("inverse needs a finite valid order");
        Rat c0 = 0;
        for (const auto& [e, x] : coef_) {
            if (e == Exp{0, 0, 0}) {
                if (x.size() != 1 || x.terms()[0].first != 0)
                    throw std::invalid_argument("inverse: constant term is not scalar");
                c0 = x.terms()[0].second;
            } else if (inv_deg(e) <= 0) {
                throw std::invalid_argument("inverse: nonnegative-degree tail present");
            }
        }
        if (c0 == 0) throw std::invalid_argument("inverse: vanishing constant term");
        // x = c0 (1 + n), n strictly inverse-positive: 1/x = (1/c0) sum (-n)^k.
        TruncatedSeries n = *this;
        n *= Rat(1) / c0;
        n.accumulate({0, 0, 0}, Element::one(), -1);
        TruncatedSeries out = scalar(alg_, vars_, Rat(1) / c0, valid_order_);
        TruncatedSeries pw = scalar(alg_, vars_, 1, valid_order_);
        for (int k = 1; k <= valid_order_; ++k) {
            // Truncate back to the target order: products of inverse-positive
            // series keep extending their exact range, and those deeper
            // coefficients (never used in the result) grow explosively.
            pw = (pw * n).truncate(valid_order_);
            if (pw.is_zero()) break;
            out.add_scaled(pw, (k % 2 ? Rat(-1) : Rat(1)) / c0);
        }
        return out;
    }

    // Substitute v -> v + c (binomial expansion; exact through valid_order).
    TruncatedSeries shift(const std::string& v, const Rat& c) const {
        const int k = var_index(v);
        TruncatedSeries out(alg_, vars_, valid_order_);
        for (const auto& [e, x] : coef_) {
            const int m = e[k];
            const long jmax = (m >= 0) ? m
                                       : static_cast<long>(valid_order_) - inv_deg(e);
            if (m < 0 && valid_order_ >= kExactOrder)
                throw std::invalid_argument("shift of an untruncated inverse power");
            Rat cj = 1;
            for (long j = 0; j <= jmax; ++j) {
                if (j > 0) cj *= c;
                Exp f = e;
                f[k] = m - static_cast<int>(j);
                out.accumulate(f, x, binomial(m, j) * cj);
            }
        }
        return out;
    }

    // Substitute v -> -v.
    TruncatedSeries negate_var(const std::string& v) const {
        const int k = var_index(v);
        TruncatedSeries out(alg_, vars_, valid_order_);
        for (const auto& [e, x] : coef_) out.accumulate(e, x, (e[k] % 2) ? -1 : 1);
        return out;
    }

    // Substitute v -> -v - c (composition of the two above).
    TruncatedSeries reflect_var(const std::string& v, const Rat& c) const {
        // g(-v-c) = n(v+c) for n(v) = g(-v)
        return negate_var(v).shift(v, c);
    }

    // Re-express this series over a larger/reordered variable list.
    TruncatedSeries relabel(std::vector<std::string> new_vars) const {
        TruncatedSeries out(alg_, std::move(new_vars), valid_order_);
        std::array<int, 3> pos{0, 0, 0};
        for (std::size_t k = 0; k < vars_.size(); ++k) pos[k] = out.var_index(vars_[k]);
        for (const auto& [e, x] : coef_) {
            Exp f{0, 0, 0};
            for (std::size_t k = 0; k < vars_.size(); ++k) f[pos[k]] = e[k];
            out.accumulate(f, x);
        }
        return out;
    }

    TruncatedSeries truncate(int new_order) const {
        TruncatedSeries out(alg_, vars_, std::min(valid_order_, new_order));
        for (const auto& [e, x] : coef_) out.accumulate(e, x);
        return out;
    }

    // First stored nonzero term (exponent, element) if any — failure witness.
    std::optional<std::pair<Exp, Element>> first_term() const {
        if (coef_.empty()) return std::nullopt;
        return *coef_.begin();
    }

    // Exact equality of all coefficients through the shared valid order.
    friend bool equal_to_order(const TruncatedSeries& a, const TruncatedSeries& b) {
        TruncatedSeries d = a;
        d -= b;
        return d.is_zero();
    }

private:
    // Guaranteed order of a product: an exact factor (or a zero factor,
    // whose floor saturates) imposes no loss at all.
    static int order_plus_floor(int vo, int f) {
        if (vo >= kExactOrder || f >= kExactOrder) return kExactOrder;
        return sat_add(vo, f);
    }

    static int sat_add(int a, int b) {
        long s = static_cast<long>(a) + b;
        if (s > kExactOrder) return kExactOrder;
        if (s < -kExactOrder) return -kExactOrder;
        return static_cast<int>(s);
    }

    void require_compatible(const TruncatedSeries& o) const {
        if (alg_ != o.alg_ || vars_ != o.vars_)
            throw std::invalid_argument("series over different algebras or variables");
    }

    void prune() {
        for (auto it = coef_.begin(); it != coef_.end();) {
            if (inv_deg(it->first) > valid_order_)
                it = coef_.erase(it);
            else
                ++it;
        }
    }

    const Algebra* alg_ = nullptr;
    std::vector<std::string> vars_;
    std::map<Exp, Element> coef_;
    int valid_order_ = 0;
};

// Square matrix of series sharing variables and valid order.
class MatrixOfSeries {
public:
    MatrixOfSeries() = default; // empty placeholder; assign before use
    MatrixOfSeries(int n, const TruncatedSeries& fill) : n_(n), entries_(n * n, fill) {}

    static MatrixOfSeries zero(int n, const Algebra* alg, std::vector<std::string> vars,
                               int valid_order) {
        return MatrixOfSeries(n, TruncatedSeries::zero(alg, std::move(vars), valid_order));
    }

    static MatrixOfSeries identity(int n, const Algebra* alg,
                                   std::vector<std::string> vars, int valid_order) {
        MatrixOfSeries m = zero(n, alg, vars, valid_order);
        for (int i = 1; i <= n; ++i)
            m.at(i, i) = TruncatedSeries::scalar(alg, vars, 1, valid_order);
        return m;
    }

    int n() const { return n_; }
    TruncatedSeries& at(int i, int j) { return entries_[(i - 1) * n_ + (j - 1)]; }
    const TruncatedSeries& at(int i, int j) const { return entries_[(i - 1) * n_ + (j - 1)]; }

    MatrixOfSeries transpose() const {
        MatrixOfSeries out = *this;
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j) out.at(i, j) = at(j, i);
        return out;
    }

    friend MatrixOfSeries operator*(const MatrixOfSeries& a, const MatrixOfSeries& b) {
        MatrixOfSeries out = a;
        for (int i = 1; i <= a.n_; ++i)
            for (int j = 1; j <= a.n_; ++j) {
                TruncatedSeries acc = a.at(i, 1) * b.at(1, j);
                for (int k = 2; k <= a.n_; ++k) acc += a.at(i, k) * b.at(k, j);
                out.at(i, j) = acc;
            }
        return out;
    }

    friend MatrixOfSeries operator+(MatrixOfSeries a, const MatrixOfSeries& b) {
        for (int i = 1; i <= a.n_; ++i)
            for (int j = 1; j <= a.n_; ++j) a.at(i, j) += b.at(i, j);
        return a;
    }

    friend MatrixOfSeries operator-(MatrixOfSeries a, const MatrixOfSeries& b) {
        for (int i = 1; i <= a.n_; ++i)
            for (int j = 1; j <= a.n_; ++j) a.at(i, j) -= b.at(i, j);
        return a;
    }

    // Inverse of a matrix whose constant term is the identity: write
    // M = I + P with P strictly inverse-positive, invert by geometric series.
    MatrixOfSeries inverse() const {
        const Algebra* alg = at(1, 1).algebra();
        const auto& vars = at(1, 1).vars();
        int vo = at(1, 1).valid_order();
        MatrixOfSeries id = identity(n_, alg, vars, vo);
        MatrixOfSeries p = *this - id;
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j)
                if (p.at(i, j).floor_inv_deg() <= 0)
                    throw std::invalid_argument(
                        "matrix inverse: constant term is not the identity");
        MatrixOfSeries out = id;
        MatrixOfSeries pw = id;
        for (int k = 1; k <= vo; ++k) {
            pw = pw * p;
            // Cap every entry at the target order; see TruncatedSeries::inverse.
            for (auto& e : pw.entries_) e = e.truncate(vo);
            bool all_zero = true;
            for (const auto& e : pw.entries_)
                if (!e.is_zero()) all_zero = false;
            if (all_zero) break;
            if (k % 2) {
                out = out - pw;
            } else {
                out = out + pw;
            }
        }
        return out;
    }

private:
    int n_ = 0;
    std::vector<TruncatedSeries> entries_;
};

} // namespace tyv
