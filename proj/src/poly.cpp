#include "sullivan/poly.hpp"

namespace sullivan {

Poly Poly::unit(GeneratorSetPtr gens) {
    Poly p(std::move(gens));
    p.terms_[Monomial{}] = Rat(1);
    return p;
}

Poly Poly::generator(GeneratorSetPtr gens, int index) {
    Monomial m = Monomial::from_sorted({{index, 1}}, *gens);
    return term(std::move(gens), m, Rat(1));
}

Poly Poly::term(GeneratorSetPtr gens, const Monomial& m, const Rat& c) {
    Poly p(std::move(gens));
    if (c != 0) p.terms_[m] = c;
    return p;
}

Rat Poly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

std::optional<int> Poly::homogeneous_codegree() const {
    std::optional<int> codeg;
    for (const auto& [m, c] : terms_) {
        if (!codeg)
            codeg = m.codegree();
        else if (*codeg != m.codegree())
            throw DegreeError("polynomial is not homogeneous: " + to_string());
    }
    return codeg;
}

bool Poly::is_homogeneous() const {
    std::optional<int> codeg;
    for (const auto& [m, c] : terms_) {
        if (!codeg)
            codeg = m.codegree();
        else if (*codeg != m.codegree())
            return false;
    }
    return true;
}

void Poly::check_universe(const Poly& other) const {
    if (!gens_ || !other.gens_) {
        if (gens_ == other.gens_) return;
        throw StructuralError("polynomial without a generator universe");
    }
    if (gens_ != other.gens_ && *gens_ != *other.gens_)
        throw StructuralError("operands over different generator universes");
}

void Poly::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_[m] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator+(const Poly& other) const {
    check_universe(other);
    Poly out = *this;
    for (const auto& [m, c] : other.terms_) out.add_term(m, c);
    return out;
}

Poly Poly::operator-(const Poly& other) const {
    check_universe(other);
    Poly out = *this;
    for (const auto& [m, c] : other.terms_) out.add_term(m, -c);
    return out;
}

Poly Poly::operator-() const {
    Poly out(gens_);
    for (const auto& [m, c] : terms_) out.terms_[m] = -c;
    return out;
}

Poly Poly::scaled(const Rat& c) const {
    Poly out(gens_);
    if (c == 0) return out;
    for (const auto& [m, k] : terms_) out.terms_[m] = k * c;
    return out;
}

Poly Poly::operator*(const Poly& other) const {
    check_universe(other);
    Poly out(gens_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : other.terms_) {
            MonomialProduct p = mul(ma, mb, *gens_);
            if (p.sign == 0) continue;
            out.add_term(p.monomial, ca * cb * p.sign);
        }
    }
    return out;
}

Poly Poly::pow(int k) const {
    if (k < 0) throw StructuralError("negative power");
    Poly out = Poly::unit(gens_);
    for (int i = 0; i < k; ++i) out = out * *this;
    return out;
}

bool operator==(const Poly& a, const Poly& b) {
    a.check_universe(b);
    return a.terms_ == b.terms_;
}

Poly Poly::substitute(int gen_index, const Poly& replacement) const {
    check_universe(replacement);
    int gen_codeg = gens_->at(gen_index).codegree;
    if (!replacement.is_zero()) {
        auto codeg = replacement.homogeneous_codegree();  // throws if inhomogeneous
        if (codeg && *codeg != gen_codeg)
            throw DegreeError("replacement for '" + gens_->at(gen_index).name + "' has codegree " +
                              std::to_string(*codeg) + ", expected " + std::to_string(gen_codeg));
    }
    Poly out(gens_);
    for (const auto& [m, c] : terms_) {
        if (!m.contains(gen_index)) {
            out.add_term(m, c);
            continue;
        }
        MonomialSplit s = split_off(m, gen_index, *gens_);
        Poly piece = replacement.pow(s.exponent) * Poly::term(gens_, s.rest, Rat(1));
        out = out + piece.scaled(c * s.sign);
    }
    return out;
}

bool Poly::mentions(int gen_index) const {
    for (const auto& [m, c] : terms_)
        if (m.contains(gen_index)) return true;
    return false;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rat a = c;
        bool negative = a < 0;
        if (negative) a = -a;
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        std::string coeff = sullivan::to_string(a);
        if (m.is_unit()) {
            out += coeff;
        } else if (coeff == "1") {
            out += m.to_string(*gens_);
        } else {
            out += coeff + "*" + m.to_string(*gens_);
        }
    }
    return out;
}

}  // namespace sullivan
