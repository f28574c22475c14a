#pragma once

#include <map>

#include "hecke/finite_field.hpp"
#include "hecke/root_datum.hpp"

namespace hecke {

// The monoid algebra of the dominant cocharacter cone, with basis tau_lambda.
// Keys are always dominant; zero coefficients are never stored.
class MonoidAlgebraElement {
 public:
  MonoidAlgebraElement(RootDatumPtr rd, const Fq& field)
      : rd_(std::move(rd)), field_(&field) {}
  static MonoidAlgebraElement tau(RootDatumPtr rd, const Fq& field,
                                  const IntVec& lambda);
  static MonoidAlgebraElement one(RootDatumPtr rd, const Fq& field);

  const RootDatum& datum() const { return *rd_; }
  RootDatumPtr datum_ptr() const { return rd_; }
  const Fq& field() const { return *field_; }
  const std::map<IntVec, FqElem>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t support_size() const { return terms_.size(); }

  FqElem coeff(const IntVec& lambda) const;
  void add_term(const IntVec& lambda, const FqElem& c);  // checks dominance

  MonoidAlgebraElement operator+(const MonoidAlgebraElement& o) const;
  MonoidAlgebraElement operator-(const MonoidAlgebraElement& o) const;
  MonoidAlgebraElement operator*(const MonoidAlgebraElement& o) const;
  MonoidAlgebraElement scaled(const FqElem& s) const;
  bool operator==(const MonoidAlgebraElement& o) const;

 private:
  RootDatumPtr rd_;
  const Fq* field_;
  std::map<IntVec, FqElem> terms_;
};

}  // namespace hecke
