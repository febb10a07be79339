/**
 * @file serialize.hpp
 * @brief JSON encodings.
 *
 * A rational c is the pair [numerator, denominator]; integers too large for
 * 64 bits are written as decimal strings. A Laurent polynomial is an object
 * from exponent strings (highest first) to rationals; a Scalar is
 * {"num": ..., "den": ...}. Values over a fixed point v = v0 are plain
 * rationals.
 */

#pragma once

#include "diagrams.hpp"
#include "schur.hpp"
#include "transitions.hpp"

#include <nlohmann/json.hpp>

#include <limits>
#include <string>

namespace tlortho {

using Json = nlohmann::ordered_json;

inline Json integer_to_json(const Integer &z) {
  if (z.fits_slong_p())
    return Json(z.get_si());
  return Json(z.get_str());
}

inline Integer integer_from_json(const Json &j) {
  if (j.is_string())
    return Integer(j.get<std::string>());
  if (j.is_number_integer())
    return Integer(j.get<long>());
  throw std::invalid_argument("expected an integer");
}

inline Json rational_to_json(const Rational &q) {
  return Json::array({integer_to_json(q.get_num()), integer_to_json(q.get_den())});
}

inline Rational rational_from_json(const Json &j) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument("expected [numerator, denominator]");
  Rational q(integer_from_json(j[0]), integer_from_json(j[1]));
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator");
  q.canonicalize();
  return q;
}

inline Json to_json(const LaurentPoly &p) {
  Json o = Json::object();
  auto t = p.terms();
  for (auto it = t.rbegin(); it != t.rend(); ++it)
    o[std::to_string(it->first)] = rational_to_json(it->second);
  return o;
}

inline LaurentPoly laurent_from_json(const Json &j) {
  if (!j.is_object())
    throw std::invalid_argument("expected a Laurent polynomial object");
  std::map<int, Rational> t;
  for (const auto &[k, v] : j.items()) {
    Rational c = rational_from_json(v);
    if (c != 0)
      t[std::stoi(k)] += c;
  }
  return LaurentPoly::from_terms(t);
}

inline Json to_json(const Scalar &s) { return Json{{"num", to_json(s.num())}, {"den", to_json(s.den())}}; }

inline Scalar scalar_from_json(const Json &j) {
  return Scalar(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
}

template <class Pt> Json to_json(const PointField<Pt> &x) { return rational_to_json(x.value()); }

inline Json to_json(const OneFactor &a) { return Json(a.entries()); }
inline Json to_json(const BratteliWalk &w) { return Json(w.to_string()); }
inline Json to_json(const LinkDiagram &l) { return Json(l.partners()); }
inline Json to_json(const PlanarDiagram &d) { return Json(d.partners()); }
inline Json to_json(const Shape &s) { return Json::array({s.lambda1, s.lambda2}); }

inline Json to_json(const StandardTableau &t) { return Json::array({Json(t.top()), Json(t.bottom())}); }

inline Json to_json(const IndexObject &x) {
  return std::visit([](const auto &v) { return to_json(v); }, x);
}

template <CoefficientField K> Json to_json(const TensorVector<K> &t) {
  Json terms = Json::array();
  for (const auto &[m, c] : t.terms())
    terms.push_back(Json{{"signs", mask_signs(m, t.n())}, {"coeff", to_json(c)}});
  return Json{{"n", t.n()}, {"terms", terms}};
}

inline TensorVector<Scalar> tensor_from_json(const Json &j) {
  TensorVector<Scalar> t(j.at("n").get<int>());
  for (const auto &term : j.at("terms")) {
    auto signs = term.at("signs").get<std::vector<int>>();
    if (static_cast<int>(signs.size()) != t.n())
      throw std::invalid_argument("tensor term has the wrong length");
    t.add_term(signs_mask(signs), scalar_from_json(term.at("coeff")));
  }
  return t;
}

template <CoefficientField K> Json to_json(const Matrix<K> &m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
      row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Nonzero entries only: {"rows", "cols", "entries": [[r, c, value], ...]}, 0-based.
template <CoefficientField K> Json to_sparse_json(const Matrix<K> &m) {
  Json e = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero())
        e.push_back(Json::array({r, c, to_json(m(r, c))}));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", e}};
}

template <CoefficientField K> Json to_json(const BlockMatrix<K> &b) {
  Json blocks = Json::array();
  for (std::size_t k = 0; k < b.blocks.size(); ++k)
    blocks.push_back(Json{{"m", b.weights[k]}, {"matrix", to_json(b.blocks[k])}});
  return blocks;
}

inline Json to_json(const PairingPolynomial &p) {
  Json terms = Json::array();
  for (const auto &[e, c] : p.terms())
    terms.push_back(Json::array({Json(e), integer_to_json(c)}));
  return terms;
}

template <CoefficientField K> Json to_json(const TransitionMatrix<K> &t) {
  Json index = Json::array();
  for (const auto &a : t.index)
    index.push_back(to_json(a));
  return Json{{"shape", to_json(t.shape)},
              {"kind", t.kind == TransitionKind::P ? "P" : "Pprime"},
              {"index", index},
              {"entries", to_json(t.entries)}};
}

} // namespace tlortho
