#include "hecke/monoid_algebra.hpp"

#include "hecke/errors.hpp"

namespace hecke {

MonoidAlgebraElement MonoidAlgebraElement::tau(RootDatumPtr rd, const Fq& field,
                                               const IntVec& lambda) {
  MonoidAlgebraElement e(std::move(rd), field);
  e.add_term(lambda, field.one());
  return e;
}

MonoidAlgebraElement MonoidAlgebraElement::one(RootDatumPtr rd, const Fq& field) {
  return tau(std::move(rd), field, IntVec(rd ? rd->rank() : 0, 0));
}

FqElem MonoidAlgebraElement::coeff(const IntVec& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? field_->zero() : it->second;
}

void MonoidAlgebraElement::add_term(const IntVec& lambda, const FqElem& c) {
  if (c.is_zero()) return;
  if (!rd_->dominant_cocharacter(lambda))
    throw Error(Errc::NotDominant, "tau index " + vec_str(lambda) + " is not dominant");
  auto it = terms_.find(lambda);
  if (it == terms_.end()) {
    terms_.emplace(lambda, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MonoidAlgebraElement MonoidAlgebraElement::operator+(const MonoidAlgebraElement& o) const {
  MonoidAlgebraElement r = *this;
  for (const auto& [la, c] : o.terms_) r.add_term(la, c);
  return r;
}

MonoidAlgebraElement MonoidAlgebraElement::operator-(const MonoidAlgebraElement& o) const {
  MonoidAlgebraElement r = *this;
  for (const auto& [la, c] : o.terms_) r.add_term(la, -c);
  return r;
}

MonoidAlgebraElement MonoidAlgebraElement::operator*(const MonoidAlgebraElement& o) const {
  MonoidAlgebraElement r(rd_, *field_);
  for (const auto& [la, c] : terms_)
    for (const auto& [mu, d] : o.terms_) r.add_term(vec_add(la, mu), c * d);
  return r;
}

MonoidAlgebraElement MonoidAlgebraElement::scaled(const FqElem& s) const {
  MonoidAlgebraElement r(rd_, *field_);
  for (const auto& [la, c] : terms_) r.add_term(la, c * s);
  return r;
}

bool MonoidAlgebraElement::operator==(const MonoidAlgebraElement& o) const {
  return terms_ == o.terms_;
}

}  // namespace hecke
