#include "opd/algcheck.hpp"

#include <stdexcept>

namespace opd {

const Rat& FinAlgebra::c(const std::string& op, int i, int j, int k) const {
  auto it = ops.find(op);
  if (it == ops.end()) throw std::invalid_argument("unknown operation '" + op + "'");
  return it->second[(static_cast<size_t>(i) * dim + j) * dim + k];
}

void FinAlgebra::add_op(const std::string& name, std::vector<Rat> tensor) {
  if (static_cast<int>(tensor.size()) != dim * dim * dim)
    throw std::invalid_argument("structure tensor for '" + name + "' must have dim^3 entries");
  ops[name] = std::move(tensor);
}

Vec FinAlgebra::product(const std::string& op, const Vec& x, const Vec& y) const {
  auto it = ops.find(op);
  if (it == ops.end()) throw std::invalid_argument("unknown operation '" + op + "'");
  const auto& t = it->second;
  Vec out(static_cast<size_t>(dim), Rat(0));
  for (int i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[j] == 0) continue;
      const Rat xy = x[i] * y[j];
      for (int k = 0; k < dim; ++k) {
        const Rat& ck = t[(static_cast<size_t>(i) * dim + j) * dim + k];
        if (ck != 0) out[k] += xy * ck;
      }
    }
  }
  return out;
}

Vec apply_op(const Mat& p, const Vec& v) {
  Vec out(static_cast<size_t>(p.rows), Rat(0));
  for (int i = 0; i < p.rows; ++i)
    for (int j = 0; j < p.cols; ++j)
      if (p.at(i, j) != 0 && v[j] != 0) out[i] += p.at(i, j) * v[j];
  return out;
}

namespace {

// Evaluation slot for one generator: sign * op(x, y), arguments swapped when
// flip is set.
struct Eval {
  std::string op;
  Rat sign = 1;
  bool flip = false;
  bool ready = false;
};

Vec eval_gen(const FinAlgebra& a, const Eval& e, const Vec& x, const Vec& y) {
  Vec out = e.flip ? a.product(e.op, y, x) : a.product(e.op, x, y);
  if (e.sign != 1)
    for (auto& v : out) v *= e.sign;
  return out;
}

Vec basis_vec(int d, int i) {
  Vec v(static_cast<size_t>(d), Rat(0));
  v[i] = 1;
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

} // namespace

bool check_algebra(const FinAlgebra& a, const Presentation& p,
                   const std::map<std::string, std::string>& binding) {
  const int n = p.gens.size();
  const int d = a.dim;
  std::vector<Eval> ev(static_cast<size_t>(n));
  for (const auto& [gen, op] : binding) {
    int i = p.gens.index(gen);
    if (i < 0) throw std::invalid_argument("binding names unknown generator '" + gen + "'");
    if (!a.ops.count(op)) throw std::invalid_argument("binding names unknown operation '" + op + "'");
    ev[i] = {op, Rat(1), false, true};
  }
  // Complete unbound generators through the involution: g_j^(12) = s g_i
  // forces g_i to evaluate as s * (g_j with swapped arguments).
  if (p.gens.mode == Mode::symmetric) {
    const Mat& A = *p.gens.action;
    bool progress = true;
    while (progress) {
      progress = false;
      for (int j = 0; j < n; ++j) {
        if (!ev[j].ready) continue;
        int i = -1;
        bool simple = true;
        for (int k = 0; k < n; ++k) {
          if (A.at(j, k) == 0) continue;
          if (i >= 0) { simple = false; break; }
          i = k;
        }
        if (!simple || i < 0 || i == j || ev[i].ready) continue;
        const Rat& s = A.at(j, i);
        if (s != 1 && s != -1) continue;
        ev[i] = {ev[j].op, s * ev[j].sign, !ev[j].flip, true};
        progress = true;
      }
    }
  }
  for (int i = 0; i < n; ++i)
    if (!ev[i].ready)
      throw std::invalid_argument("no binding for generator '" + p.gens.names[i] +
                                  "' and none is forced by the involution");
  // Involution consistency: B_i(y,x) = sum_k A_ik B_k(x,y) on basis pairs.
  if (p.gens.mode == Mode::symmetric) {
    const Mat& A = *p.gens.action;
    for (int g = 0; g < n; ++g)
      for (int x = 0; x < d; ++x)
        for (int y = 0; y < d; ++y) {
          Vec lhs = eval_gen(a, ev[g], basis_vec(d, y), basis_vec(d, x));
          Vec rhs(static_cast<size_t>(d), Rat(0));
          for (int k = 0; k < n; ++k) {
            if (A.at(g, k) == 0) continue;
            Vec t = eval_gen(a, ev[k], basis_vec(d, x), basis_vec(d, y));
            for (int l = 0; l < d; ++l) rhs[l] += A.at(g, k) * t[l];
          }
          for (int l = 0; l < d; ++l)
            if (lhs[l] != rhs[l]) return false;
        }
  }
  // Relation evaluation on all basis triples. Variable placement per block:
  // I (x y) z, II (y z) x, III (z x) y; ns: left (x y) z, right x (y z).
  const int blocks = p.gens.mode == Mode::symmetric ? 3 : 2;
  for (int r = 0; r < p.relations.rank(); ++r) {
    for (int xi = 0; xi < d; ++xi)
      for (int yi = 0; yi < d; ++yi)
        for (int zi = 0; zi < d; ++zi) {
          Vec x = basis_vec(d, xi), y = basis_vec(d, yi), z = basis_vec(d, zi);
          Vec acc(static_cast<size_t>(d), Rat(0));
          for (int u = 0; u < blocks; ++u)
            for (int i = 0; i < n; ++i)
              for (int j = 0; j < n; ++j) {
                const Rat& cf = p.relations.basis.at(r, w3_index(p.gens, i, j, u));
                if (cf == 0) continue;
                Vec inner, val;
                if (p.gens.mode == Mode::nonsymmetric && u == 1) {
                  inner = eval_gen(a, ev[j], y, z);
                  val = eval_gen(a, ev[i], x, inner);
                } else if (u == 0) {
                  inner = eval_gen(a, ev[j], x, y);
                  val = eval_gen(a, ev[i], inner, z);
                } else if (u == 1) {
                  inner = eval_gen(a, ev[j], y, z);
                  val = eval_gen(a, ev[i], inner, x);
                } else {
                  inner = eval_gen(a, ev[j], z, x);
                  val = eval_gen(a, ev[i], inner, y);
                }
                for (int l = 0; l < d; ++l) acc[l] += cf * val[l];
              }
          if (!is_zero(acc)) return false;
        }
  }
  return true;
}

bool is_di_average(const FinAlgebra& a, const std::string& op, const Mat& p) {
  const int d = a.dim;
  if (p.rows != d || p.cols != d)
    throw std::invalid_argument("operator dimension mismatch");
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Vec x = basis_vec(d, i), y = basis_vec(d, j);
      Vec mid = a.product(op, apply_op(p, x), apply_op(p, y));
      Vec lhs = apply_op(p, a.product(op, x, apply_op(p, y)));
      Vec rhs = apply_op(p, a.product(op, apply_op(p, x), y));
      if (lhs != mid || rhs != mid) return false;
    }
  return true;
}

bool is_tri_average(const FinAlgebra& a, const std::string& op, const Mat& p,
                    const Rat& lambda) {
  if (!is_di_average(a, op, p)) return false;
  const int d = a.dim;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Vec x = basis_vec(d, i), y = basis_vec(d, j);
      Vec lhs = a.product(op, apply_op(p, x), apply_op(p, y));
      Vec rhs = apply_op(p, a.product(op, x, y));
      for (auto& v : rhs) v *= lambda;
      if (lhs != rhs) return false;
    }
  return true;
}

static FinAlgebra replicate(const FinAlgebra& a, const Mat& p, bool tri) {
  const int d = a.dim;
  FinAlgebra out;
  out.dim = d;
  for (const auto& [name, tensor] : a.ops) {
    std::vector<Rat> dashv(tensor.size()), vdash(tensor.size());
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        // x dashv y = x . P(y): e_i dashv e_j = sum_l P_lj (e_i . e_l)
        for (int l = 0; l < d; ++l) {
          if (p.at(l, j) != 0)
            for (int k = 0; k < d; ++k)
              dashv[(static_cast<size_t>(i) * d + j) * d + k] +=
                  p.at(l, j) * tensor[(static_cast<size_t>(i) * d + l) * d + k];
          if (p.at(l, i) != 0)
            for (int k = 0; k < d; ++k)
              vdash[(static_cast<size_t>(i) * d + j) * d + k] +=
                  p.at(l, i) * tensor[(static_cast<size_t>(l) * d + j) * d + k];
        }
      }
    out.add_op(name + "_dashv", std::move(dashv));
    out.add_op(name + "_vdash", std::move(vdash));
    if (tri) out.add_op(name + "_perp", tensor);
  }
  return out;
}

FinAlgebra replicate_di(const FinAlgebra& a, const Mat& p) {
  for (const auto& [name, tensor] : a.ops)
    if (!is_di_average(a, name, p))
      throw std::invalid_argument("operator is not di-average for '" + name + "'");
  return replicate(a, p, false);
}

FinAlgebra replicate_tri(const FinAlgebra& a, const Mat& p) {
  for (const auto& [name, tensor] : a.ops)
    if (!is_tri_average(a, name, p, Rat(1)))
      throw std::invalid_argument("operator is not tri-average of weight one for '" + name + "'");
  return replicate(a, p, true);
}

FinAlgebra derived_ops(const FinAlgebra& a,
                       const std::map<std::string, std::vector<DerivedTerm>>& defs) {
  const int d = a.dim;
  FinAlgebra out = a;
  for (const auto& [name, terms] : defs) {
    std::vector<Rat> tensor(static_cast<size_t>(d) * d * d);
    for (const auto& term : terms) {
      auto it = a.ops.find(term.op);
      if (it == a.ops.end()) throw std::invalid_argument("unknown operation '" + term.op + "'");
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          for (int k = 0; k < d; ++k) {
            const Rat& src = term.flip ? it->second[(static_cast<size_t>(j) * d + i) * d + k]
                                       : it->second[(static_cast<size_t>(i) * d + j) * d + k];
            if (src != 0) tensor[(static_cast<size_t>(i) * d + j) * d + k] += term.coeff * src;
          }
    }
    out.add_op(name, std::move(tensor));
  }
  return out;
}

} // namespace opd
