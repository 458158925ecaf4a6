#include "smw/polynomial.hpp"
#include "smw/text.hpp"

#include <algorithm>
#include <utility>

namespace smw {

std::string to_string(const Rational& r) {
    return r.str();
}

Rational parse_rational(std::string_view s) {
    if (s.empty()) throw Error("empty rational literal");
    bool neg = false;
    std::size_t i = 0;
    if (s[0] == '+' || s[0] == '-') {
        neg = (s[0] == '-');
        i = 1;
    }
    std::string num, den;
    bool in_den = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c == '/') {
            if (in_den || num.empty()) throw Error("malformed rational: " + std::string(s));
            in_den = true;
        } else if (c >= '0' && c <= '9') {
            (in_den ? den : num).push_back(c);
        } else {
            throw Error("malformed rational: " + std::string(s));
        }
    }
    if (num.empty() || (in_den && den.empty()))
        throw Error("malformed rational: " + std::string(s));
    Integer n(num);
    Integer d = in_den ? Integer(den) : Integer(1);
    if (d == 0) throw Error("zero denominator: " + std::string(s));
    Rational r(n, d);
    return neg ? Rational(-r) : r;
}

Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    Integer num = 1, den = 1;
    for (unsigned i = 0; i < k; ++i) {
        num *= Integer(n - i);
        den *= Integer(i + 1);
    }
    return num / den;
}

GeneratorSet::GeneratorSet(std::vector<Generator> gens) : gens_(std::move(gens)) {
    if (gens_.empty()) throw Error("generator set must not be empty");
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (gens_[i].name.empty()) throw Error("generator with empty name");
        auto [it, fresh] = index_.emplace(gens_[i].name, i);
        (void)it;
        if (!fresh) throw Error("duplicate generator name: " + gens_[i].name);
    }
}

std::optional<std::size_t> GeneratorSet::index_of(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t GeneratorSet::require(std::string_view name) const {
    auto i = index_of(name);
    if (!i) throw Error("unknown generator: " + std::string(name));
    return *i;
}

bool GeneratorSet::equals(const GeneratorSet& o) const {
    if (this == &o) return true;
    if (gens_.size() != o.gens_.size()) return false;
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name != o.gens_[i].name || gens_[i].degree != o.gens_[i].degree)
            return false;
    return true;
}

GenSetPtr make_genset(std::vector<Generator> gens) {
    return std::make_shared<const GeneratorSet>(std::move(gens));
}

Monomial Monomial::var(std::size_t ngens, std::size_t i, unsigned e) {
    std::vector<unsigned> v(ngens, 0);
    v.at(i) = e;
    return Monomial(std::move(v));
}

bool Monomial::is_one() const {
    return std::all_of(e_.begin(), e_.end(), [](unsigned x) { return x == 0; });
}

unsigned Monomial::weighted_degree(const GeneratorSet& gs) const {
    unsigned d = 0;
    for (std::size_t i = 0; i < e_.size(); ++i) d += e_[i] * gs[i].degree;
    return d;
}

bool Monomial::divides(const Monomial& m) const {
    if (e_.size() != m.e_.size()) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > m.e_[i]) return false;
    return true;
}

bool Monomial::coprime(const Monomial& m) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > 0 && m.e_[i] > 0) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
    std::vector<unsigned> v(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) v[i] = e_[i] + m.e_[i];
    return Monomial(std::move(v));
}

Monomial Monomial::divide_by(const Monomial& m) const {
    std::vector<unsigned> v(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (m.e_[i] > e_[i]) throw Error("monomial division is not exact");
        v[i] = e_[i] - m.e_[i];
    }
    return Monomial(std::move(v));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    std::vector<unsigned> v(a.e_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::max(a.e_[i], b.e_[i]);
    return Monomial(std::move(v));
}

Polynomial::Polynomial(GenSetPtr gs) : gs_(std::move(gs)) {
    if (!gs_) throw Error("polynomial without a generator set");
}

Polynomial Polynomial::constant(GenSetPtr gs, const Rational& c) {
    Polynomial p(std::move(gs));
    if (c != 0) p.t_.emplace(Monomial::one(p.gs_->size()), c);
    return p;
}

Polynomial Polynomial::generator(GenSetPtr gs, std::size_t index, unsigned power) {
    Polynomial p(std::move(gs));
    if (index >= p.gs_->size()) throw Error("generator index out of range");
    if (power == 0) return constant(p.gs_, 1);
    p.t_.emplace(Monomial::var(p.gs_->size(), index, power), Rational(1));
    return p;
}

Polynomial Polynomial::generator(GenSetPtr gs, std::string_view name, unsigned power) {
    std::size_t i = gs->require(name);
    return generator(std::move(gs), i, power);
}

Polynomial Polynomial::term(GenSetPtr gs, Monomial m, const Rational& c) {
    Polynomial p(std::move(gs));
    if (m.size() != p.gs_->size()) throw Error("monomial width does not match generator set");
    if (c != 0) p.t_.emplace(std::move(m), c);
    return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? Rational(0) : it->second;
}

void Polynomial::require_same_genset(const Polynomial& q) const {
    if (gs_ == q.gs_) return;
    if (!gs_->equals(*q.gs_)) throw Error("generator-set mismatch");
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = t_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& q) {
    require_same_genset(q);
    for (const auto& [m, c] : q.t_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
    require_same_genset(q);
    for (const auto& [m, c] : q.t_) add_term(m, Rational(-c));
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& q) const {
    Polynomial r = *this;
    r += q;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& q) const {
    Polynomial r = *this;
    r -= q;
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(gs_);
    for (const auto& [m, c] : t_) r.t_.emplace(m, Rational(-c));
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& q) const {
    require_same_genset(q);
    Polynomial r(gs_);
    for (const auto& [ma, ca] : t_)
        for (const auto& [mb, cb] : q.t_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::operator*(const Rational& c) const {
    Polynomial r(gs_);
    if (c == 0) return r;
    for (const auto& [m, k] : t_) r.t_.emplace(m, k * c);
    return r;
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial r = constant(gs_, 1);
    Polynomial base = *this;
    while (k > 0) {
        if (k & 1u) r = r * base;
        k >>= 1u;
        if (k > 0) base = base * base;
    }
    return r;
}

bool Polynomial::operator==(const Polynomial& q) const {
    require_same_genset(q);
    return t_ == q.t_;
}

unsigned Polynomial::max_degree() const {
    unsigned d = 0;
    for (const auto& [m, c] : t_) {
        (void)c;
        d = std::max(d, m.weighted_degree(*gs_));
    }
    return d;
}

std::optional<unsigned> Polynomial::homogeneous_degree() const {
    if (t_.empty()) return std::nullopt;
    unsigned d = t_.begin()->first.weighted_degree(*gs_);
    for (const auto& [m, c] : t_) {
        (void)c;
        if (m.weighted_degree(*gs_) != d) return std::nullopt;
    }
    return d;
}

bool Polynomial::is_homogeneous() const {
    return t_.empty() || homogeneous_degree().has_value();
}

Polynomial add(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial mul(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial exact_divide(const Polynomial& p, const Polynomial& q) {
    if (q.is_zero()) throw Error("division by the zero polynomial");
    p.require_same_genset(q);
    // Long division by a single divisor under the storage order. Exactness
    // means no term ever has to be moved to a remainder.
    Polynomial rem = p;
    Polynomial quot(p.genset());
    Polynomial residue(p.genset());
    const auto qlead = std::prev(q.terms().end());
    while (!rem.is_zero()) {
        const auto rlead = std::prev(rem.terms().end());
        if (qlead->first.divides(rlead->first)) {
            Monomial m = rlead->first.divide_by(qlead->first);
            Rational c = rlead->second / qlead->second;
            Polynomial t = Polynomial::term(p.genset(), std::move(m), c);
            quot += t;
            rem -= t * q;
        } else {
            residue.add_term(rlead->first, rlead->second);
            Polynomial drop = Polynomial::term(p.genset(), rlead->first, rlead->second);
            rem -= drop;
        }
    }
    if (!residue.is_zero())
        throw Error("inexact division; remainder " + to_text(residue));
    return quot;
}

Polynomial homogeneous_component(const Polynomial& p, unsigned degree) {
    Polynomial r(p.genset());
    for (const auto& [m, c] : p.terms())
        if (m.weighted_degree(*p.genset()) == degree) r.add_term(m, c);
    return r;
}

Polynomial substitute(const Polynomial& p,
                      const std::map<std::string, Polynomial>& images) {
    if (images.empty()) throw Error("substitute: no images supplied");
    const GenSetPtr target = images.begin()->second.genset();
    for (const auto& [name, img] : images) {
        (void)name;
        if (img.genset() != target && !img.genset()->equals(*target))
            throw Error("substitute: images live in different generator sets");
    }
    const GeneratorSet& gs = *p.genset();

    std::vector<char> used(gs.size(), 0);
    for (const auto& [m, c] : p.terms()) {
        (void)c;
        for (std::size_t i = 0; i < gs.size(); ++i)
            if (m.exp(i) > 0) used[i] = 1;
    }

    std::vector<const Polynomial*> image_of(gs.size(), nullptr);
    for (std::size_t i = 0; i < gs.size(); ++i) {
        if (!used[i]) continue;
        auto it = images.find(gs[i].name);
        if (it == images.end())
            throw Error("substitute: no image for generator " + gs[i].name);
        const Polynomial& img = it->second;
        if (!img.is_zero()) {
            auto d = img.homogeneous_degree();
            if (!d) throw Error("substitute: image of " + gs[i].name + " is not homogeneous");
            if (*d != gs[i].degree)
                throw Error("substitute: degree mismatch for generator " + gs[i].name);
        }
        image_of[i] = &img;
    }

    Polynomial result(target);
    for (const auto& [m, c] : p.terms()) {
        Polynomial term = Polynomial::constant(target, c);
        for (std::size_t i = 0; i < gs.size() && !term.is_zero(); ++i)
            if (m.exp(i) > 0) term = term * image_of[i]->pow(m.exp(i));
        result += term;
    }
    return result;
}

}  // namespace smw
