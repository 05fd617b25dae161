#include "selsolve/ncpoly.hpp"

#include "selsolve/errors.hpp"

namespace selsolve {

NCPoly NCPoly::constant(const Rational& c) { return monomial(Word{}, c); }

NCPoly NCPoly::monomial(const Word& w, const Rational& c) {
  NCPoly p;
  p.add(w, c);
  return p;
}

NCPoly NCPoly::monomial(const Word& w, AffineForm coef) {
  NCPoly p;
  if (!coef.is_zero()) p.terms_.emplace(w, std::move(coef));
  return p;
}

bool NCPoly::has_unknowns() const {
  for (const auto& [w, c] : terms_)
    if (c.has_unknowns()) return true;
  return false;
}

AffineForm NCPoly::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? AffineForm{} : it->second;
}

void NCPoly::add(const Word& w, const AffineForm& coef, const Rational& scale) {
  if (coef.is_zero() || selsolve::is_zero(scale)) return;
  auto [it, inserted] = terms_.try_emplace(w);
  it->second.add_scaled(coef, scale);
  if (it->second.is_zero()) terms_.erase(it);
}

void NCPoly::add(const Word& w, const Rational& c) {
  if (selsolve::is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(w);
  it->second.add_constant(c);
  if (it->second.is_zero()) terms_.erase(it);
}

void NCPoly::add_scaled(const NCPoly& other, const Rational& scale) {
  for (const auto& [w, c] : other.terms_) add(w, c, scale);
}

std::string NCPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    if (!w.empty()) out += "*" + w.to_string();
  }
  return out;
}

NCPoly poly_mul(const NCPoly& a, const NCPoly& b) {
  const bool a_sym = a.has_unknowns();
  const bool b_sym = b.has_unknowns();
  if (a_sym && b_sym) throw NonlinearProduct();
  NCPoly out;
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      const Word w = word_mul(wa, wb);
      if (a_sym)
        out.add(w, ca, cb.constant());
      else
        out.add(w, cb, ca.constant());
    }
  }
  return out;
}

NCPoly poly_pow(const NCPoly& p, int k) {
  if (k == 0) return NCPoly::constant(1);
  NCPoly base = p;
  if (k < 0) {
    if (p.size() != 1 || p.terms().begin()->second != AffineForm(Rational(1)))
      throw NotInvertible("negative power needs a single word with coefficient 1");
    base = NCPoly::monomial(p.terms().begin()->first.inverse());
    k = -k;
  }
  NCPoly out = base;
  for (int i = 1; i < k; ++i) out = poly_mul(out, base);
  return out;
}

namespace {

NCPoly inverse_image(Generator x, const NCPoly& image) {
  const NCPoly xinv = NCPoly::monomial(Word{inverse(x)}, -1);
  const NCPoly right = NCPoly::monomial(Word{inverse(x)});
  return poly_mul(poly_mul(xinv, image), right);
}

}  // namespace

Derivation::Derivation(NCPoly image_u, NCPoly image_v, std::string name)
    : image_u_(std::move(image_u)),
      image_v_(std::move(image_v)),
      image_uinv_(inverse_image(Generator::U, image_u_)),
      image_vinv_(inverse_image(Generator::V, image_v_)),
      name_(std::move(name)) {}

const NCPoly& Derivation::image(Generator g) const {
  switch (g) {
    case Generator::U:
      return image_u_;
    case Generator::V:
      return image_v_;
    case Generator::Uinv:
      return image_uinv_;
    case Generator::Vinv:
      return image_vinv_;
  }
  return image_u_;
}

NCPoly apply_derivation(const Derivation& d, const NCPoly& p) {
  const bool d_sym = d.has_unknowns();
  if (d_sym && p.has_unknowns()) throw NonlinearProduct();
  NCPoly out;
  for (const auto& [w, coef] : p.terms()) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      const Word left = w.prefix(i);
      const Word right = w.suffix(i + 1);
      for (const auto& [wi, ci] : d.image(w[i]).terms()) {
        const Word product = word_mul(left, wi, right);
        if (d_sym)
          out.add(product, ci, coef.constant());
        else
          out.add(product, coef, ci.constant());
      }
    }
  }
  return out;
}

}  // namespace selsolve
