#include "permvar/torus/torus.hpp"

#include <algorithm>

#include "permvar/errors.hpp"
#include "permvar/permanent/permanent.hpp"
#include "permvar/ring/poly_matrix.hpp"

namespace permvar {

WeightAssignment::WeightAssignment(std::size_t r, std::size_t c, std::vector<std::size_t> w)
    : rows(r), cols(c), weight_one(std::move(w)) {
  std::sort(weight_one.begin(), weight_one.end());
  weight_one.erase(std::unique(weight_one.begin(), weight_one.end()), weight_one.end());
  if (weight_one.empty() || weight_one.size() >= rows)
    throw PreconditionError("weight-one rows must form a nonempty proper subset of the rows");
  if (weight_one.back() >= rows) throw PreconditionError("weight-one row index out of range");
}

bool WeightAssignment::is_weight_one(std::size_t row) const {
  return std::binary_search(weight_one.begin(), weight_one.end(), row);
}

std::vector<std::size_t> WeightAssignment::weight_zero_rows() const {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < rows; ++r)
    if (!is_weight_one(r)) out.push_back(r);
  return out;
}

namespace {

void check_shape(const QMatrix& p, const WeightAssignment& w) {
  if (p.rows() != w.rows || p.cols() != w.cols) throw StructuralError("matrix shape does not match the weight assignment");
}

QMatrix stack(const std::vector<mpq_class>& q, const QMatrix& a) {
  if (q.size() != a.cols()) throw StructuralError("vector length does not match the matrix width");
  QMatrix s(a.rows() + 1, a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) s(0, j) = q[j];
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s(i + 1, j) = a(i, j);
  return s;
}

bool maximal_permanents_vanish(const QMatrix& m) {
  std::vector<std::size_t> rows(m.rows());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  auto dp = subset_permanents(m, rows, mpq_class(0), mpq_class(1));
  for (auto mask : colex_subsets(m.cols(), m.rows()))
    if (sgn(dp[mask]) != 0) return false;
  return true;
}

std::vector<nlohmann::json> kernel_json(const std::vector<std::vector<mpz_class>>& ks) {
  std::vector<nlohmann::json> out;
  for (const auto& v : ks) {
    nlohmann::json row = nlohmann::json::array();
    for (const auto& x : v) row.push_back(x.get_str());
    out.push_back(row);
  }
  return out;
}

}  // namespace

nlohmann::json matrix_to_json(const QMatrix& m) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const mpq_class& x = m(i, j);
      if (x.get_den() == 1 && x.get_num().fits_slong_p())
        row.push_back(x.get_num().get_si());
      else
        row.push_back(x.get_str());
    }
    out.push_back(row);
  }
  return out;
}

QMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("matrix must be a JSON array of rows");
  std::size_t r = j.size(), c = r ? j[0].size() : 0;
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (!j[i].is_array() || j[i].size() != c) throw ParseError("matrix rows must be arrays of equal length");
    for (std::size_t k = 0; k < c; ++k) {
      const auto& e = j[i][k];
      if (e.is_number_integer())
        m(i, k) = mpq_class(e.get<long>());
      else if (e.is_string()) {
        try {
          m(i, k) = mpq_class(e.get<std::string>());
          m(i, k).canonicalize();
        } catch (const std::invalid_argument&) {
          throw ParseError("bad matrix entry '" + e.get<std::string>() + "'");
        }
        if (m(i, k).get_den() == 0) throw ParseError("zero denominator in matrix entry");
      } else {
        throw ParseError("matrix entries must be integers or rational strings");
      }
    }
  }
  return m;
}

QMatrix limit_map(const QMatrix& p, const WeightAssignment& w) {
  check_shape(p, w);
  QMatrix out = p;
  for (std::size_t r : w.weight_one)
    for (std::size_t j = 0; j < p.cols(); ++j) out(r, j) = 0;
  return out;
}

bool is_fixed(const QMatrix& p, const WeightAssignment& w) { return limit_map(p, w) == p; }

nlohmann::json TypeReport::to_json() const {
  nlohmann::json j{{"shape", {point.rows(), point.cols()}},
                   {"k", k},
                   {"mode", permvar::to_string(mode)},
                   {"point", matrix_to_json(point)},
                   {"size", size},
                   {"rank", rank},
                   {"corank", corank},
                   {"type", type},
                   {"kernel_basis", kernel_json(kernel_basis)}};
  j["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
  return j;
}

TypeReport classify_type(const QMatrix& ap, DerivMode mode) {
  TypeReport r;
  r.mode = mode;
  r.k = deriv_k(ap, mode);
  r.point = ap;
  QMatrix d = derivative_matrix(ap, mode);
  r.size = d.rows();
  r.rank = rank(d);
  r.corank = r.size - r.rank;
  r.type = r.corank;
  r.kernel_basis = kernel_basis(d);
  return r;
}

bool kernel_extension_check(const QMatrix& ap, std::span<const std::vector<mpq_class>> qs, DerivMode mode) {
  deriv_k(ap, mode);
  if (mode == DerivMode::B1 && qs.size() != 1) throw StructuralError("mode B1 takes exactly one vector");
  if (mode == DerivMode::L && qs.size() != 2) throw StructuralError("mode L takes exactly two vectors");
  for (const auto& q : qs)
    if (!maximal_permanents_vanish(stack(q, ap))) return false;
  return true;
}

std::size_t jacobian_rank_at(std::span<const MPoly> fs, std::span<const Scalar> point) {
  if (fs.empty()) return 0;
  const RingPtr& ring = fs.front().ring();
  if (point.size() != ring->nvars()) throw StructuralError("point has the wrong number of coordinates");
  ScalarMatrix jac(fs.size(), ring->nvars(), Scalar::zero(ring->domain()));
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t v = 0; v < ring->nvars(); ++v) jac(i, v) = fs[i].diff(v).evaluate(point);
  return rank(jac);
}

nlohmann::json TangentSplit::to_json() const {
  nlohmann::json j{{"t0", t0}, {"t1", t1}, {"fixed_dim", fixed_dim}, {"agrees", agrees()}};
  j["formula_t1"] = formula_t1 ? nlohmann::json(*formula_t1) : nlohmann::json(nullptr);
  return j;
}

TangentSplit tangent_decomposition(const QMatrix& p, const WeightAssignment& w, std::span<const MPoly> gens) {
  check_shape(p, w);
  if (!is_fixed(p, w)) throw PreconditionError("point is not fixed by the torus action");
  if (gens.empty()) throw StructuralError("tangent_decomposition needs generators");
  const RingPtr& ring = gens.front().ring();
  const auto& u = ring->universe();
  if (u.rows() != p.rows() || u.cols() != p.cols() || !u.aux_names().empty())
    throw StructuralError("generators must live in the grid ring of the point");

  std::vector<Scalar> pt;
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j) pt.push_back(ring->scalar(p(i, j)));

  std::vector<std::size_t> cols0, cols1;
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j) (w.is_weight_one(i) ? cols1 : cols0).push_back(u.grid_index(i, j));

  const Scalar zero = Scalar::zero(ring->domain());
  ScalarMatrix jac(gens.size(), ring->nvars(), zero);
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (std::size_t v = 0; v < ring->nvars(); ++v) jac(g, v) = gens[g].diff(v).evaluate(pt);
  auto restrict = [&](const std::vector<std::size_t>& cols) {
    ScalarMatrix m(gens.size(), cols.size(), zero);
    for (std::size_t g = 0; g < gens.size(); ++g)
      for (std::size_t c = 0; c < cols.size(); ++c) m(g, c) = jac(g, cols[c]);
    return m;
  };
  std::size_t r0 = rank(restrict(cols0)), r1 = rank(restrict(cols1)), rall = rank(jac);
  if (r0 + r1 != rall) throw StructuralError("Jacobian at the fixed point does not split by weight");

  TangentSplit s;
  s.t0 = cols0.size() - r0;
  s.t1 = cols1.size() - r1;
  s.fixed_dim = cols0.size();

  QMatrix ap(w.rows - w.weight_one.size(), w.cols);
  auto zero_rows = w.weight_zero_rows();
  for (std::size_t i = 0; i < zero_rows.size(); ++i)
    for (std::size_t j = 0; j < w.cols; ++j) ap(i, j) = p(zero_rows[i], j);
  const std::size_t nr = w.weight_one.size();
  if ((nr == 1 || nr == 2) && ap.cols() == ap.rows() + 2 && ap.rows() >= 1) {
    auto rep = classify_type(ap, nr == 1 ? DerivMode::B1 : DerivMode::L);
    s.formula_t1 = nr * rep.corank;
  }
  return s;
}

QMatrix e_pattern_matrix(std::size_t k, const mpq_class& a, const mpq_class& b) {
  if (k < 2) throw PreconditionError("E-pattern matrix needs k >= 2");
  QMatrix e(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      e(i, j) = (i == k - 1 || j == k - 1) ? b : a;
    }
  return e;
}

}  // namespace permvar
