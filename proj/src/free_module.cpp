#include "gmod/free_module.hpp"

#include <string>

namespace gmod {

FreeElement::FreeElement(FreeModule parent, std::vector<Polynomial> components)
    : parent_(std::move(parent)), comps_(std::move(components)) {
  if (static_cast<int>(comps_.size()) != parent_.rank())
    throw structural_error("element component count does not match rank");
  for (int i = 0; i < parent_.rank(); ++i) {
    const Polynomial& f = comps_[i];
    if (f.is_zero()) continue;
    require_same_ring(f.ring(), parent_.ring());
    int d = *f.degree() + parent_.twist(i);
    if (!degree_) {
      degree_ = d;
    } else if (*degree_ != d) {
      throw inhomogeneous_error(
          "inhomogeneous element: component " + std::to_string(i) +
          " has degree " + std::to_string(d) + ", expected " +
          std::to_string(*degree_));
    }
  }
}

bool FreeElement::is_zero() const { return !degree_.has_value(); }

bool FreeElement::operator==(const FreeElement& o) const {
  return parent_ == o.parent_ && comps_ == o.comps_;
}

FreeElement element_zero(const FreeModule& F) {
  std::vector<Polynomial> comps(F.rank(), Polynomial::zero(F.ring()));
  return FreeElement(F, std::move(comps));
}

FreeElement element_unit(const FreeModule& F, int pos) {
  std::vector<Polynomial> comps(F.rank(), Polynomial::zero(F.ring()));
  comps.at(pos) = Polynomial::constant(F.ring(), 1);
  return FreeElement(F, std::move(comps));
}

FreeElement element_add(const FreeElement& a, const FreeElement& b) {
  if (!(a.parent() == b.parent()))
    throw structural_error("sum of elements from different free modules");
  std::vector<Polynomial> comps(a.parent().rank());
  for (int i = 0; i < a.parent().rank(); ++i)
    comps[i] = poly_add(a.component(i), b.component(i));
  return FreeElement(a.parent(), std::move(comps));
}

FreeElement element_sub(const FreeElement& a, const FreeElement& b) {
  return element_add(a, element_scale(b, -1));
}

FreeElement element_scale(const FreeElement& a, std::int64_t c) {
  std::vector<Polynomial> comps(a.parent().rank());
  for (int i = 0; i < a.parent().rank(); ++i)
    comps[i] = poly_scale(a.component(i), c);
  return FreeElement(a.parent(), std::move(comps));
}

FreeElement element_mul_term(const FreeElement& a, std::int64_t c, const Monomial& m) {
  std::vector<Polynomial> comps(a.parent().rank());
  for (int i = 0; i < a.parent().rank(); ++i)
    comps[i] = poly_mul_term(a.component(i), c, m);
  return FreeElement(a.parent(), std::move(comps));
}

FreeElement element_mul_poly(const FreeElement& a, const Polynomial& f) {
  std::vector<Polynomial> comps(a.parent().rank());
  for (int i = 0; i < a.parent().rank(); ++i)
    comps[i] = poly_mul(a.component(i), f);
  return FreeElement(a.parent(), std::move(comps));
}

FreeMap::FreeMap(FreeModule source, FreeModule target,
                 std::vector<std::vector<Polynomial>> matrix)
    : source_(std::move(source)), target_(std::move(target)), mat_(std::move(matrix)) {
  require_same_ring(source_.ring(), target_.ring());
  if (static_cast<int>(mat_.size()) != target_.rank())
    throw structural_error("matrix row count does not match target rank");
  for (const auto& row : mat_)
    if (static_cast<int>(row.size()) != source_.rank())
      throw structural_error("matrix column count does not match source rank");
  map_degree_check(*this);
}

FreeMap FreeMap::identity(const FreeModule& F) {
  std::vector<std::vector<Polynomial>> m(
      F.rank(), std::vector<Polynomial>(F.rank(), Polynomial::zero(F.ring())));
  for (int i = 0; i < F.rank(); ++i)
    m[i][i] = Polynomial::constant(F.ring(), 1);
  return FreeMap(F, F, std::move(m));
}

FreeMap FreeMap::zero(const FreeModule& source, const FreeModule& target) {
  std::vector<std::vector<Polynomial>> m(
      target.rank(),
      std::vector<Polynomial>(source.rank(), Polynomial::zero(source.ring())));
  return FreeMap(source, target, std::move(m));
}

FreeMap FreeMap::from_columns(const FreeModule& target,
                              const std::vector<FreeElement>& columns) {
  std::vector<int> src_twists;
  src_twists.reserve(columns.size());
  for (const FreeElement& c : columns) {
    if (!(c.parent() == target))
      throw structural_error("column does not live in the target module");
    if (c.is_zero())
      throw structural_error("zero column has no determined degree");
    src_twists.push_back(*c.degree());
  }
  FreeModule source(target.ring(), std::move(src_twists));
  std::vector<std::vector<Polynomial>> m(
      target.rank(),
      std::vector<Polynomial>(columns.size(), Polynomial::zero(target.ring())));
  for (size_t j = 0; j < columns.size(); ++j)
    for (int i = 0; i < target.rank(); ++i)
      m[i][j] = columns[j].component(i);
  return FreeMap(source, target, std::move(m));
}

FreeElement FreeMap::column(int j) const {
  std::vector<Polynomial> comps(target_.rank());
  for (int i = 0; i < target_.rank(); ++i) comps[i] = mat_[i][j];
  return FreeElement(target_, std::move(comps));
}

std::vector<FreeElement> FreeMap::columns() const {
  std::vector<FreeElement> out;
  out.reserve(source_.rank());
  for (int j = 0; j < source_.rank(); ++j) out.push_back(column(j));
  return out;
}

FreeElement FreeMap::apply(const FreeElement& v) const {
  if (!(v.parent() == source_))
    throw structural_error("element does not live in the map's source");
  FreeElement acc = element_zero(target_);
  for (int j = 0; j < source_.rank(); ++j) {
    if (v.component(j).is_zero()) continue;
    acc = element_add(acc, element_mul_poly(column(j), v.component(j)));
  }
  return acc;
}

bool FreeMap::is_zero() const {
  for (const auto& row : mat_)
    for (const auto& f : row)
      if (!f.is_zero()) return false;
  return true;
}

bool FreeMap::operator==(const FreeMap& o) const {
  return source_ == o.source_ && target_ == o.target_ && mat_ == o.mat_;
}

FreeMap map_compose(const FreeMap& g, const FreeMap& f) {
  if (!(f.target() == g.source()))
    throw structural_error("composition shape mismatch");
  const RingPtr& ring = f.source().ring();
  std::vector<std::vector<Polynomial>> m(
      g.target().rank(),
      std::vector<Polynomial>(f.source().rank(), Polynomial::zero(ring)));
  for (int i = 0; i < g.target().rank(); ++i)
    for (int j = 0; j < f.source().rank(); ++j) {
      Polynomial acc = Polynomial::zero(ring);
      for (int k = 0; k < g.source().rank(); ++k)
        acc = poly_add(acc, poly_mul(g.entry(i, k), f.entry(k, j)));
      m[i][j] = std::move(acc);
    }
  return FreeMap(f.source(), g.target(), std::move(m));
}

const FreeMap& map_degree_check(const FreeMap& f) {
  for (int i = 0; i < f.target().rank(); ++i)
    for (int j = 0; j < f.source().rank(); ++j) {
      const Polynomial& e = f.entry(i, j);
      if (e.is_zero()) continue;
      int want = f.source().twist(j) - f.target().twist(i);
      if (*e.degree() != want)
        throw inhomogeneous_error(
            "inhomogeneous map: entry (" + std::to_string(i) + "," +
            std::to_string(j) + ") has degree " + std::to_string(*e.degree()) +
            ", expected " + std::to_string(want));
    }
  return f;
}

}  // namespace gmod
