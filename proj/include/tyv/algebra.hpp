#pragma once

// Exact PBW normal-form engine for the Yangian of gl_N.
//
// Elements are rational linear combinations of ordered monomials in the
// generators t[i,j,r] (1 <= i,j <= N, level r >= 1).  The total generator
// order is (r, i, j) lexicographic; a monomial is in normal form when its
// factors are sorted non-decreasingly under that order.  Out-of-order pairs
// are straightened with the componentwise commutation rule
//
//   [t[i,j,r], t[k,l,s]] = sum_{a=1}^{min(r,s)}
//        ( t[k,j,a-1] t[i,l,r+s-a] - t[k,j,r+s-a] t[i,l,a-1] ),
//
// where t[p,q,0] = delta_{pq}.  Correction terms have strictly lower
// filtration degree (deg t[i,j,r] = r-1), which drives termination.

#include "tyv/rational.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <deque>
#include <limits>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace tyv {

using GenCode = std::uint32_t;
using MonoId = std::uint32_t;

struct Gen {
    int i = 1, j = 1, r = 1;
};

class Element {
public:
    using Term = std::pair<MonoId, Rat>;

    Element() = default;

    static Element zero() { return Element(); }

    // Unit monomial always interns as id 0 (see Algebra constructor).
    static Element scalar(Rat c) {
        Element e;
        if (c != 0) e.terms_.emplace_back(0, std::move(c));
        return e;
    }
    static Element one() { return scalar(1); }
    static Element mono(MonoId m, Rat c = 1) {
        Element e;
        if (c != 0) e.terms_.emplace_back(m, std::move(c));
        return e;
    }

    // Takes ownership of an already-sorted, zero-free term vector.
    static Element from_sorted_terms(std::vector<Term> t) {
        Element e;
        e.terms_ = std::move(t);
        return e;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    bool operator==(const Element& o) const { return terms_ == o.terms_; }
    bool operator!=(const Element& o) const { return !(*this == o); }

    Element& add_scaled(const Element& o, const Rat& c) {
        if (c == 0 || o.terms_.empty()) return *this;
        std::vector<Term> merged;
        merged.reserve(terms_.size() + o.terms_.size());
        auto a = terms_.begin(), ae = terms_.end();
        auto b = o.terms_.begin(), be = o.terms_.end();
        while (a != ae && b != be) {
            if (a->first < b->first) {
                merged.push_back(*a++);
            } else if (b->first < a->first) {
                merged.emplace_back(b->first, b->second * c);
                ++b;
            } else {
                Rat v = a->second + b->second * c;
                if (v != 0) merged.emplace_back(a->first, std::move(v));
                ++a;
                ++b;
            }
        }
        merged.insert(merged.end(), a, ae);
        for (; b != be; ++b) merged.emplace_back(b->first, b->second * c);
        terms_ = std::move(merged);
        return *this;
    }

    Element& operator+=(const Element& o) { return add_scaled(o, 1); }
    Element& operator-=(const Element& o) { return add_scaled(o, -1); }

    Element& operator*=(const Rat& c) {
        if (c == 0) {
            terms_.clear();
        } else {
            for (auto& t : terms_) t.second *= c;
        }
        return *this;
    }

    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(Element a, const Rat& c) { return a *= c; }
    friend Element operator*(const Rat& c, Element a) { return a *= c; }
    friend Element operator-(Element a) { return a *= Rat(-1); }

    // Coefficient of a given monomial (zero when absent).
    Rat coeff(MonoId m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, MonoId k) { return t.first < k; });
        if (it != terms_.end() && it->first == m) return it->second;
        return 0;
    }

private:
    std::vector<Term> terms_; // sorted by monomial id, no zero coefficients
};

class Algebra {
public:
    explicit Algebra(int n) : n_(n) {
        if (n < 1) throw std::invalid_argument("algebra size must be >= 1");
        intern({}); // unit monomial gets id 0
    }

    Algebra(const Algebra&) = delete;
    Algebra& operator=(const Algebra&) = delete;

    int n() const { return n_; }

    GenCode gen(int i, int j, int r) const {
        check_gen(i, j, r);
        return static_cast<GenCode>(((r - 1) * n_ + (i - 1)) * n_ + (j - 1));
    }

    Gen gen_of(GenCode g) const {
        Gen out;
        out.j = static_cast<int>(g % n_) + 1;
        g /= n_;
        out.i = static_cast<int>(g % n_) + 1;
        out.r = static_cast<int>(g / n_) + 1;
        return out;
    }

    static int gen_degree_of_level(int r) { return r - 1; }
    int gen_degree(GenCode g) const { return gen_of(g).r - 1; }

    // ---- monomials -------------------------------------------------------

    MonoId intern(std::vector<GenCode> word) const {
        assert(std::is_sorted(word.begin(), word.end()));
        {
            std::shared_lock lk(mono_mutex_);
            auto it = mono_ids_.find(word);
            if (it != mono_ids_.end()) return it->second;
        }
        std::unique_lock lk(mono_mutex_);
        auto it = mono_ids_.find(word);
        if (it != mono_ids_.end()) return it->second;
        MonoId id = static_cast<MonoId>(mono_words_.size());
        int deg = 0;
        for (GenCode g : word) deg += gen_degree(g);
        mono_words_.push_back(std::move(word));
        mono_degrees_.push_back(deg);
        mono_ids_.emplace(mono_words_.back(), id);
        return id;
    }

    const std::vector<GenCode>& word(MonoId m) const {
        std::shared_lock lk(mono_mutex_);
        return mono_words_[m];
    }

    int mono_degree(MonoId m) const {
        std::shared_lock lk(mono_mutex_);
        return mono_degrees_[m];
    }

    Element generator(int i, int j, int r) const {
        return Element::mono(intern({gen(i, j, r)}));
    }

    // Filtration degree; the zero element reports INT_MIN.
    int degree(const Element& e) const {
        int d = std::numeric_limits<int>::min();
        for (const auto& [m, c] : e.terms()) d = std::max(d, mono_degree(m));
        return d;
    }

    // ---- multiplication --------------------------------------------------

    // Normal form of (sorted monomial m) * t(g).  Memoized; the cache is
    // bounded by total stored term count and dropped wholesale when it grows
    // past the budget (recomputation is always correct).
    Element mono_mul_gen(MonoId m, GenCode g) const {
        const std::uint64_t key = (static_cast<std::uint64_t>(m) << 32) | g;
        {
            std::shared_lock lk(mul_gen_mutex_);
            auto it = mul_gen_cache_.find(key);
            if (it != mul_gen_cache_.end()) return it->second;
        }
        Element result = compute_mono_mul_gen(m, g);
        std::unique_lock lk(mul_gen_mutex_);
        if (mul_gen_cached_terms_ + result.size() > kCacheTermBudget) {
            mul_gen_cache_.clear();
            mul_gen_cached_terms_ = 0;
        }
        mul_gen_cached_terms_ += result.size();
        return mul_gen_cache_.emplace(key, result).first->second;
    }

    // Hash-map accumulator: merging many normal forms pairwise is quadratic,
    // so sums are gathered unordered and sorted once at the end.
    class Accumulator {
    public:
        void add(const Element& e, const Rat& c) {
            if (c == 0) return;
            for (const auto& [m, v] : e.terms()) map_[m] += v * c;
        }
        Element build() const {
            std::vector<Element::Term> terms;
            terms.reserve(map_.size());
            for (const auto& [m, v] : map_)
                if (v != 0) terms.emplace_back(m, v);
            std::sort(terms.begin(), terms.end(),
                      [](const Element::Term& a, const Element::Term& b) {
                          return a.first < b.first;
                      });
            return Element::from_sorted_terms(std::move(terms));
        }

    private:
        std::unordered_map<MonoId, Rat> map_;
    };

    Element elem_mul_gen(const Element& e, GenCode g) const {
        Accumulator acc;
        for (const auto& [m, c] : e.terms()) acc.add(mono_mul_gen(m, g), c);
        return acc.build();
    }

    // Normal form of the product of two sorted monomials.  Short-word pairs
    // (the hot set: quadratic generator expressions recombined across
    // thousands of series products) are memoized under a hard term budget;
    // long words are folded without caching, since caching their huge normal
    // forms is the dominant memory sink on long runs.
    Element mono_mul(MonoId a, MonoId b) const {
        const bool cacheable = word(a).size() + word(b).size() <= kPairCacheMaxWord;
        const std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | b;
        if (cacheable) {
            std::shared_lock lk(pair_mutex_);
            auto it = pair_cache_.find(key);
            if (it != pair_cache_.end()) return it->second;
        }
        Element acc = Element::mono(a);
        const std::vector<GenCode> w = word(b); // copy: acc work may grow the table
        for (GenCode g : w) acc = elem_mul_gen(acc, g);
        if (cacheable) {
            std::unique_lock lk(pair_mutex_);
            if (pair_cached_terms_ + acc.size() > kCacheTermBudget) {
                pair_cache_.clear();
                pair_cached_terms_ = 0;
            }
            pair_cached_terms_ += acc.size();
            return pair_cache_.emplace(key, std::move(acc)).first->second;
        }
        return acc;
    }

    Element mul(const Element& a, const Element& b) const {
        if (a.is_zero() || b.is_zero()) return Element::zero();
        Accumulator acc;
        for (const auto& [mb, cb] : b.terms()) {
            if (word(mb).size() <= kPairCacheMaxWord / 2) {
                for (const auto& [ma, ca] : a.terms()) acc.add(mono_mul(ma, mb), ca * cb);
                continue;
            }
            Element partial = a;
            const std::vector<GenCode> w = word(mb);
            for (GenCode g : w) partial = elem_mul_gen(partial, g);
            acc.add(partial, cb);
        }
        return acc.build();
    }

    Element commutator(const Element& a, const Element& b) const {
        Element out = mul(a, b);
        out -= mul(b, a);
        return out;
    }

    Element anticommutator(const Element& a, const Element& b) const {
        Element out = mul(a, b);
        out += mul(b, a);
        return out;
    }

    // Normal form of t(g1) * t(g2).
    Element straighten_pair(GenCode g1, GenCode g2) const {
        return mono_mul_gen(intern({g1}), g2);
    }
    Element straighten_pair(const Gen& a, const Gen& b) const {
        return straighten_pair(gen(a.i, a.j, a.r), gen(b.i, b.j, b.r));
    }

    // ---- textual format --------------------------------------------------

    // Terms joined by " + ", each "c * t[i,j,r] t[k,l,s] ...", with c an
    // exact rational.  Deterministic graded-lexicographic term order.
    std::string to_string(const Element& e) const {
        if (e.is_zero()) return "0";
        std::vector<MonoId> order;
        order.reserve(e.size());
        for (const auto& [m, c] : e.terms()) order.push_back(m);
        std::sort(order.begin(), order.end(), [&](MonoId a, MonoId b) {
            int da = mono_degree(a), db = mono_degree(b);
            if (da != db) return da < db;
            return word(a) < word(b);
        });
        std::ostringstream os;
        bool first = true;
        for (MonoId m : order) {
            if (!first) os << " + ";
            first = false;
            os << e.coeff(m).get_str();
            const auto& w = word(m);
            for (std::size_t k = 0; k < w.size(); ++k) {
                Gen x = gen_of(w[k]);
                os << (k == 0 ? " * " : " ");
                os << "t[" << x.i << "," << x.j << "," << x.r << "]";
            }
        }
        return os.str();
    }

    std::size_t intern_table_size() const {
        std::shared_lock lk(mono_mutex_);
        return mono_words_.size();
    }

private:
    void check_gen(int i, int j, int r) const {
        if (i < 1 || i > n_ || j < 1 || j > n_)
            throw std::out_of_range("generator index out of range for N");
        if (r < 1) throw std::out_of_range("generator level must be >= 1");
    }

    // One straightening correction term: coefficient times a word of length
    // 0, 1 or 2 (levels may exceed those of the inputs).
    struct Correction {
        Rat coeff;
        std::vector<GenCode> factors; // unsorted
    };

    // [t(g1), t(g2)] as a list of corrections.
    std::vector<Correction> commutator_terms(GenCode g1, GenCode g2) const {
        Gen a = gen_of(g1), b = gen_of(g2);
        std::vector<Correction> out;
        const int lo = std::min(a.r, b.r);
        for (int p = 1; p <= lo; ++p) {
            // + t[k,j,p-1] t[i,l,a.r+b.r-p]
            append_pair(out, 1, b.i, a.j, p - 1, a.i, b.j, a.r + b.r - p);
            // - t[k,j,a.r+b.r-p] t[i,l,p-1]
            append_pair(out, -1, b.i, a.j, a.r + b.r - p, a.i, b.j, p - 1);
        }
        return out;
    }

    void append_pair(std::vector<Correction>& out, Rat c, int i1, int j1, int r1,
                     int i2, int j2, int r2) const {
        Correction t;
        t.coeff = std::move(c);
        if (r1 == 0) {
            if (i1 != j1) return; // t^(0) off-diagonal vanishes
        } else {
            t.factors.push_back(gen(i1, j1, r1));
        }
        if (r2 == 0) {
            if (i2 != j2) return;
        } else {
            t.factors.push_back(gen(i2, j2, r2));
        }
        out.push_back(std::move(t));
    }

    Element compute_mono_mul_gen(MonoId m, GenCode g) const {
        std::vector<GenCode> w = word(m);
        if (w.empty() || w.back() <= g) {
            w.push_back(g);
            return Element::mono(intern(std::move(w)));
        }
        const GenCode g1 = w.back();
        w.pop_back();
        const MonoId x = intern(std::move(w));
        // x * g1 * g  =  x * g * g1  +  x * [t(g1), t(g)]
        Accumulator acc;
        acc.add(elem_mul_gen(mono_mul_gen(x, g), g1), 1);
        for (const Correction& c : commutator_terms(g1, g)) {
            switch (c.factors.size()) {
            case 0:
                acc.add(Element::mono(x), c.coeff);
                break;
            case 1:
                acc.add(mono_mul_gen(x, c.factors[0]), c.coeff);
                break;
            default:
                acc.add(elem_mul_gen(mono_mul_gen(x, c.factors[0]), c.factors[1]),
                        c.coeff);
                break;
            }
        }
        return acc.build();
    }

    int n_;

    mutable std::shared_mutex mono_mutex_;
    mutable std::deque<std::vector<GenCode>> mono_words_;
    mutable std::deque<int> mono_degrees_;
    struct WordHash {
        std::size_t operator()(const std::vector<GenCode>& w) const {
            std::size_t h = 1469598103934665603ull;
            for (GenCode g : w) {
                h ^= g + 0x9e3779b97f4a7c15ull;
                h *= 1099511628211ull;
            }
            return h;
        }
    };
    mutable std::unordered_map<std::vector<GenCode>, MonoId, WordHash> mono_ids_;

    static constexpr std::size_t kCacheTermBudget = 4'000'000;
    static constexpr std::size_t kPairCacheMaxWord = 8;
    mutable std::shared_mutex mul_gen_mutex_;
    mutable std::unordered_map<std::uint64_t, Element> mul_gen_cache_;
    mutable std::size_t mul_gen_cached_terms_ = 0;
    mutable std::shared_mutex pair_mutex_;
    mutable std::unordered_map<std::uint64_t, Element> pair_cache_;
    mutable std::size_t pair_cached_terms_ = 0;
};

} // namespace tyv
