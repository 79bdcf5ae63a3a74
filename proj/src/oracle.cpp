#include "eicat/oracle.hpp"

#include <random>

namespace eicat {

namespace {

template <class F>
using Vec = std::vector<typename F::Element>;

template <class F>
bool all_zero(const F& f, const Vec<F>& v) {
  for (const auto& x : v)
    if (!f.is_zero(x)) return false;
  return true;
}

template <class F>
Vec<F> unit_vector(const F& f, std::size_t n, std::size_t i) {
  Vec<F> e(n, f.zero());
  e[i] = f.one();
  return e;
}

// Basis of A·e (as vectors of A) and the action of each b_i on it.
template <class F>
std::pair<std::vector<Vec<F>>, std::vector<SparseMatrix<F>>> summand_of(const FiniteDimAlgebra<F>& a,
                                                                      const Vec<F>& e) {
  const F& f = a.field();
  const std::size_t n = a.dim();
  RowSpace<F> span(f, n);
  for (std::size_t j = 0; j < n; ++j) span.insert(a.multiply(a.basis_vector(j), e));
  const auto& basis = span.basis();
  std::vector<SparseMatrix<F>> action;
  for (std::size_t i = 0; i < n; ++i) {
    SparseMatrix<F> m(basis.size(), basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c) {
      const auto coords = span.coordinates(a.multiply(a.basis_vector(i), basis[c]));
      std::vector<typename SparseMatrix<F>::Entry> col;
      for (std::size_t r = 0; r < coords.size(); ++r)
        if (!f.is_zero(coords[r])) col.emplace_back(r, coords[r]);
      m.set_column(c, std::move(col));
    }
    action.push_back(std::move(m));
  }
  return {basis, std::move(action)};
}

template <class F>
bool is_nilpotent(const FiniteDimAlgebra<F>& a, const RowSpace<F>& ideal) {
  const F& f = a.field();
  RowSpace<F> power = ideal;
  while (power.dim() > 0) {
    RowSpace<F> next(f, a.dim());
    for (const auto& u : power.basis())
      for (const auto& y : ideal.basis()) next.insert(a.multiply(u, y));
    if (next.dim() >= power.dim()) return false;
    power = std::move(next);
  }
  return true;
}

template <class F>
RowSpace<F> trace_form_radical(const FiniteDimAlgebra<F>& a) {
  const F& f = a.field();
  const std::size_t n = a.dim();
  Vec<F> tr(n, f.zero());
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [r, s] : a.product(k, j))
        if (r == j) tr[k] = f.add(tr[k], s);
  Matrix<F> gram(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [k, s] : a.product(i, j)) gram(i, j) = f.add(gram(i, j), f.mul(s, tr[k]));
  RowSpace<F> rad(f, n);
  for (auto& v : kernel_basis(gram.transpose())) rad.insert(std::move(v));
  return rad;
}

using IntMatrix = std::vector<std::uint64_t>;

IntMatrix mul_mod(const IntMatrix& x, const IntMatrix& y, std::size_t d, std::uint64_t q) {
  IntMatrix out(d * d, 0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      const std::uint64_t xik = x[i * d + k];
      if (xik == 0) continue;
      for (std::size_t j = 0; j < d; ++j) out[i * d + j] += xik * y[k * d + j];
    }
  for (auto& v : out) v %= q;
  return out;
}

std::uint64_t trace_of_power(IntMatrix base, std::size_t d, std::uint64_t exponent, std::uint64_t q) {
  IntMatrix result(d * d, 0);
  for (std::size_t i = 0; i < d; ++i) result[i * d + i] = 1 % q;
  while (exponent > 0) {
    if (exponent & 1) result = mul_mod(result, base, d, q);
    exponent >>= 1;
    if (exponent > 0) base = mul_mod(base, base, d, q);
  }
  std::uint64_t t = 0;
  for (std::size_t i = 0; i < d; ++i) t = (t + result[i * d + i]) % q;
  return t;
}

// Radical over F_p via the functions g_i(x) = Tr(x^(p^i)) / p^i mod p on integer lifts, evaluated
// in the left regular representation split into the blocks A·e.
RowSpace<PrimeField> p_trace_radical(const FiniteDimAlgebra<PrimeField>& a) {
  const PrimeField& f = a.field();
  const std::uint64_t p = f.characteristic();
  const std::size_t n = a.dim();
  std::vector<std::vector<SparseMatrix<PrimeField>>> blocks;
  std::vector<std::size_t> block_dims;
  for (const auto& e : a.idempotents()) {
    auto [basis, action] = summand_of(a, e);
    block_dims.push_back(basis.size());
    blocks.push_back(std::move(action));
  }
  std::size_t l = 0;
  for (std::uint64_t pw = p; pw <= n; pw *= p) ++l;

  RowSpace<PrimeField> current(f, n);
  for (std::size_t i = 0; i < n; ++i) current.insert(a.basis_vector(i));
  std::uint64_t p_i = 1;  // p^i
  for (std::size_t i = 0; i <= l; ++i, p_i *= p) {
    const std::uint64_t q = p_i * p;
    const auto& ys = current.basis();
    Matrix<PrimeField> g(f, n, ys.size());
    for (std::size_t r = 0; r < ys.size(); ++r) {
      for (std::size_t b = 0; b < n; ++b) {
        const auto x = a.multiply(ys[r], a.basis_vector(b));
        std::uint64_t t = 0;
        for (std::size_t k = 0; k < blocks.size(); ++k) {
          const std::size_t d = block_dims[k];
          if (d == 0) continue;
          IntMatrix m(d * d, 0);
          for (std::size_t s = 0; s < n; ++s) {
            if (x[s] == 0) continue;
            for (std::size_t c = 0; c < d; ++c)
              for (const auto& [row, v] : blocks[k][s].column(c)) m[row * d + c] = (m[row * d + c] + f.mul(x[s], v)) % p;
          }
          t = (t + trace_of_power(std::move(m), d, p_i, q)) % q;
        }
        if (t % p_i != 0) throw RadicalVerificationFailed("radical: p-power trace not divisible as expected");
        g(b, r) = static_cast<std::uint32_t>((t / p_i) % p);
      }
    }
    RowSpace<PrimeField> next(f, n);
    for (const auto& c : kernel_basis(g)) {
      Vec<PrimeField> x(n, 0);
      for (std::size_t r = 0; r < ys.size(); ++r)
        if (c[r] != 0)
          for (std::size_t s = 0; s < n; ++s) x[s] = f.add(x[s], f.mul(c[r], ys[r][s]));
      next.insert(std::move(x));
    }
    current = std::move(next);
    if (is_nilpotent(a, current)) return current;
  }
  throw RadicalVerificationFailed("radical: candidate ideal is not nilpotent");
}

}  // namespace

template <class F>
RowSpace<F> radical(const FiniteDimAlgebra<F>& a) {
  if constexpr (std::is_same_v<F, PrimeField>) {
    return p_trace_radical(a);
  } else {
    auto rad = trace_form_radical(a);
    if (!is_nilpotent(a, rad)) throw RadicalVerificationFailed("radical: trace-form kernel is not nilpotent");
    return rad;
  }
}

template <class F>
ModuleRep<F> top_module(const FiniteDimAlgebra<F>& a, const RowSpace<F>& rad) {
  const F& f = a.field();
  QuotientSpace<F> q(rad);
  ModuleRep<F> m{f, q.dim(), {}};
  for (std::size_t i = 0; i < a.dim(); ++i) {
    SparseMatrix<F> s(q.dim(), q.dim());
    for (std::size_t c = 0; c < q.dim(); ++c) {
      Vec<F> v(a.dim(), f.zero());
      for (const auto& [k, x] : a.product(i, q.representative(c))) v[k] = x;
      const auto image = q.project(std::move(v));
      std::vector<typename SparseMatrix<F>::Entry> col;
      for (std::size_t r = 0; r < image.size(); ++r)
        if (!f.is_zero(image[r])) col.emplace_back(r, image[r]);
      s.set_column(c, std::move(col));
    }
    m.action.push_back(std::move(s));
  }
  return m;
}

template <class F>
ModuleRep<F> top_module(const FiniteDimAlgebra<F>& a) {
  return top_module(a, radical(a));
}

template <class F>
HomologicalOracle<F>::HomologicalOracle(FiniteDimAlgebra<F> a)
    : algebra_(std::move(a)), radical_(eicat::radical(algebra_)), top_(top_module(algebra_, radical_)) {
  build_summands();
}

template <class F>
HomologicalOracle<F>::HomologicalOracle(FiniteDimAlgebra<F> a, RowSpace<F> rad)
    : algebra_(std::move(a)), radical_(std::move(rad)), top_(top_module(algebra_, radical_)) {
  build_summands();
}

template <class F>
void HomologicalOracle<F>::build_summands() {
  for (const auto& e : algebra_.idempotents()) {
    auto [basis, action] = summand_of(algebra_, e);
    summands_.push_back({std::move(basis), std::move(action)});
  }
}

namespace {

template <class F>
typename F::Element random_scalar(const F& f, std::mt19937_64& rng) {
  if constexpr (std::is_same_v<F, PrimeField>) {
    return f.from_int(static_cast<std::int64_t>(rng() % f.characteristic()));
  } else {
    return f.from_int(static_cast<std::int64_t>(rng() % 7) - 3);
  }
}

}  // namespace

template <class F>
ResolutionTrace<F> HomologicalOracle<F>::resolve(const ModuleRep<F>& m, std::size_t max_degree,
                                                 std::uint64_t seed) const {
  const F& f = algebra_.field();
  const std::size_t n = algebra_.dim();
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + 0x5EEDULL);
  ResolutionTrace<F> trace;
  ModuleRep<F> current = m;
  std::vector<Vec<F>> embedding;  // basis of `current` inside the previous P

  for (std::size_t deg = 0; deg <= max_degree; ++deg) {
    const std::size_t md = current.dim;
    // Generators: lifts of a spanning set of current / rad(current), greedily.
    RowSpace<F> covered(f, md);
    for (const auto& r : radical_.basis()) {
      for (std::size_t x = 0; x < md && covered.dim() < md; ++x) {
        Vec<F> v(md, f.zero());
        for (std::size_t i = 0; i < n; ++i) {
          if (f.is_zero(r[i])) continue;
          for (const auto& [row, val] : current.action[i].column(x)) v[row] = f.add(v[row], f.mul(r[i], val));
        }
        covered.insert(std::move(v));
      }
    }
    std::vector<std::size_t> types;
    std::vector<Vec<F>> gens;
    for (std::size_t k = 0; k < summands_.size() && covered.dim() < md; ++k) {
      RowSpace<F> piece(f, md);
      const auto& e = algebra_.idempotents()[k];
      for (std::size_t x = 0; x < md; ++x) piece.insert(current.act(e, unit_vector(f, md, x)));
      while (covered.dim() < md) {
        std::optional<Vec<F>> pick;
        for (int attempt = 0; attempt < 3 && !pick; ++attempt) {
          Vec<F> v(md, f.zero());
          for (const auto& b : piece.basis()) {
            const auto c = random_scalar(f, rng);
            for (std::size_t j = 0; j < md; ++j) v[j] = f.add(v[j], f.mul(c, b[j]));
          }
          if (!covered.contains(v)) pick = std::move(v);
        }
        for (std::size_t b = 0; b < piece.dim() && !pick; ++b)
          if (!covered.contains(piece.basis()[b])) pick = piece.basis()[b];
        if (!pick) break;
        for (std::size_t i = 0; i < n && covered.dim() < md; ++i) covered.insert(current.act(i, *pick));
        types.push_back(k);
        gens.push_back(std::move(*pick));
      }
    }
    if (covered.dim() < md) throw std::logic_error("resolve: generators do not span the module");

    // Boundary P -> current, one column per basis vector of each summand copy.
    std::size_t pdim = 0;
    for (auto k : types) pdim += summands_[k].basis.size();
    Matrix<F> boundary(f, md, pdim);
    std::size_t col = 0;
    for (std::size_t s = 0; s < gens.size(); ++s)
      for (const auto& u : summands_[types[s]].basis) {
        const auto image = current.act(u, gens[s]);
        for (std::size_t r = 0; r < md; ++r) boundary(r, col) = image[r];
        ++col;
      }
    auto ech = rref(std::move(boundary));

    ResolutionDegree<F> degree;
    degree.types = types;
    degree.dim = pdim;
    degree.target_dim = md;
    degree.boundary_rank = ech.rank;
    degree.kernel_dim = pdim - ech.rank;
    for (auto& g : gens) {
      if (deg == 0) {
        degree.images.push_back(g);
      } else {
        Vec<F> ambient(embedding.empty() ? 0 : embedding[0].size(), f.zero());
        for (std::size_t r = 0; r < g.size(); ++r) {
          if (f.is_zero(g[r])) continue;
          for (std::size_t j = 0; j < ambient.size(); ++j)
            if (!f.is_zero(embedding[r][j])) ambient[j] = f.add(ambient[j], f.mul(g[r], embedding[r][j]));
        }
        degree.images.push_back(std::move(ambient));
      }
    }
    trace.degrees.push_back(std::move(degree));
    if (pdim == ech.rank) {
      trace.complete = true;
      break;
    }
    if (deg == max_degree) break;

    // Syzygy: kernel vectors are indexed by free columns, so coordinates are read off there.
    std::vector<bool> is_pivot(pdim, false);
    for (auto c : ech.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < pdim; ++c)
      if (!is_pivot[c]) free_cols.push_back(c);
    std::vector<Vec<F>> kernel;
    for (auto fc : free_cols) {
      Vec<F> v(pdim, f.zero());
      v[fc] = f.one();
      for (std::size_t r = 0; r < ech.rank; ++r) v[ech.pivots[r]] = f.neg(ech.reduced(r, fc));
      kernel.push_back(std::move(v));
    }
    ModuleRep<F> next{f, kernel.size(), {}};
    for (std::size_t i = 0; i < n; ++i) {
      SparseMatrix<F> act(kernel.size(), kernel.size());
      for (std::size_t c = 0; c < kernel.size(); ++c) {
        Vec<F> image(pdim, f.zero());
        std::size_t offset = 0;
        for (auto k : types) {
          const std::size_t d = summands_[k].basis.size();
          std::span<const typename F::Element> in(kernel[c].data() + offset, d);
          std::span<typename F::Element> out(image.data() + offset, d);
          summands_[k].action[i].apply_add(f, in, f.one(), out);
          offset += d;
        }
        std::vector<typename SparseMatrix<F>::Entry> entries;
        for (std::size_t r = 0; r < free_cols.size(); ++r)
          if (!f.is_zero(image[free_cols[r]])) entries.emplace_back(r, image[free_cols[r]]);
        act.set_column(c, std::move(entries));
      }
      next.action.push_back(std::move(act));
    }
    current = std::move(next);
    embedding = std::move(kernel);
  }
  return trace;
}

template <class F>
std::vector<std::size_t> HomologicalOracle<F>::ext_dims(const ResolutionTrace<F>& trace, const ModuleRep<F>& target,
                                                        std::size_t upto) const {
  const F& f = algebra_.field();
  if (!trace.complete && trace.degrees.size() < upto + 2)
    throw std::invalid_argument("ext_dims: resolution does not reach the required degree");
  // Hom(A·e_k, N) = e_k N; coordinates in its reduced basis are read at the pivots.
  std::vector<RowSpace<F>> pieces;
  for (const auto& e : algebra_.idempotents()) {
    RowSpace<F> piece(f, target.dim);
    for (std::size_t x = 0; x < target.dim; ++x) piece.insert(target.act(e, unit_vector(f, target.dim, x)));
    pieces.push_back(std::move(piece));
  }
  // images[k][j][w] = v_{k,j} · w for the summand basis v and the basis w of e_k N.
  std::vector<std::vector<std::vector<Vec<F>>>> images(summands_.size());
  for (std::size_t k = 0; k < summands_.size(); ++k) {
    for (const auto& v : summands_[k].basis) {
      std::vector<Vec<F>> row;
      for (const auto& w : pieces[k].basis()) row.push_back(target.act(v, w));
      images[k].push_back(std::move(row));
    }
  }
  auto hom_dim = [&](std::size_t i) {
    std::size_t d = 0;
    if (i < trace.degrees.size())
      for (auto k : trace.degrees[i].types) d += pieces[k].dim();
    return d;
  };
  // rank of Hom(P_i, N) -> Hom(P_{i+1}, N)
  auto coboundary_rank = [&](std::size_t i) -> std::size_t {
    if (i + 1 >= trace.degrees.size()) return 0;
    const auto& src = trace.degrees[i];
    const auto& dst = trace.degrees[i + 1];
    Matrix<F> delta(f, hom_dim(i + 1), hom_dim(i));
    std::vector<std::size_t> offsets;  // offset of summand s inside P_i
    std::size_t off = 0;
    for (auto k : src.types) {
      offsets.push_back(off);
      off += summands_[k].basis.size();
    }
    std::size_t col = 0;
    for (std::size_t s = 0; s < src.types.size(); ++s) {
      const std::size_t k = src.types[s];
      for (std::size_t w = 0; w < pieces[k].dim(); ++w, ++col) {
        std::size_t row = 0;
        for (std::size_t t = 0; t < dst.types.size(); ++t) {
          const auto& g = dst.images[t];
          Vec<F> value(target.dim, f.zero());
          for (std::size_t j = 0; j < summands_[k].basis.size(); ++j) {
            const auto& c = g[offsets[s] + j];
            if (f.is_zero(c)) continue;
            const auto& img = images[k][j][w];
            for (std::size_t r = 0; r < target.dim; ++r)
              if (!f.is_zero(img[r])) value[r] = f.add(value[r], f.mul(c, img[r]));
          }
          const auto& piece = pieces[dst.types[t]];
          for (std::size_t q = 0; q < piece.dim(); ++q) delta(row + q, col) = value[piece.pivots()[q]];
          row += piece.dim();
        }
      }
    }
    return rank(delta);
  };
  std::vector<std::size_t> out;
  std::size_t previous_rank = 0;
  for (std::size_t i = 0; i <= upto; ++i) {
    const std::size_t r = coboundary_rank(i);
    out.push_back(hom_dim(i) - r - previous_rank);
    previous_rank = r;
  }
  return out;
}

template <class F>
std::vector<std::size_t> HomologicalOracle<F>::ext_dims(const ModuleRep<F>& m, const ModuleRep<F>& n,
                                                        std::size_t upto, std::uint64_t seed) const {
  return ext_dims(resolve(m, upto + 1, seed), n, upto);
}

template <class F>
bool HomologicalOracle<F>::boundaries_compose_to_zero(const ModuleRep<F>& m, const ResolutionTrace<F>& trace) const {
  const F& f = algebra_.field();
  for (std::size_t i = 1; i < trace.degrees.size(); ++i) {
    const auto& prev = trace.degrees[i - 1];
    const std::size_t target_dim = i == 1 ? m.dim : trace.degrees[i - 2].dim;
    for (const auto& g : trace.degrees[i].images) {
      Vec<F> value(target_dim, f.zero());
      std::size_t offset = 0;
      for (std::size_t s = 0; s < prev.types.size(); ++s) {
        const auto& summand = summands_[prev.types[s]];
        for (std::size_t j = 0; j < summand.basis.size(); ++j) {
          const auto& c = g[offset + j];
          if (f.is_zero(c)) continue;
          Vec<F> img;
          if (i == 1) {
            img = m.act(summand.basis[j], prev.images[s]);
          } else {
            // v · (generator image) inside P_{i-2}
            const auto& before = trace.degrees[i - 2];
            img.assign(target_dim, f.zero());
            std::size_t off2 = 0;
            for (auto k : before.types) {
              const std::size_t d = summands_[k].basis.size();
              std::span<const typename F::Element> in(prev.images[s].data() + off2, d);
              std::span<typename F::Element> out(img.data() + off2, d);
              for (std::size_t b = 0; b < algebra_.dim(); ++b)
                if (!f.is_zero(summand.basis[j][b])) summands_[k].action[b].apply_add(f, in, summand.basis[j][b], out);
              off2 += d;
            }
          }
          for (std::size_t r = 0; r < target_dim; ++r) value[r] = f.add(value[r], f.mul(c, img[r]));
        }
        offset += summand.basis.size();
      }
      if (!all_zero(f, value)) return false;
    }
  }
  return true;
}

namespace {

DimensionVerdict verdict_from(const std::vector<std::size_t>& ext, std::size_t cap) {
  DimensionVerdict v;
  v.cap = cap;
  if (ext.size() > cap + 1 && ext[cap + 1] != 0) return v;
  std::size_t top = 0;
  for (std::size_t i = 0; i <= cap && i < ext.size(); ++i)
    if (ext[i] != 0) top = i;
  v.value = top;
  return v;
}

}  // namespace

template <class F>
DimensionVerdict HomologicalOracle<F>::projective_dimension(const ModuleRep<F>& m, std::size_t cap) const {
  return verdict_from(ext_dims(m, top_, cap + 1), cap);
}

template <class F>
DimensionVerdict HomologicalOracle<F>::injective_dimension(const ModuleRep<F>& m, std::size_t cap) const {
  return verdict_from(ext_dims(top_, m, cap + 1), cap);
}

template <class F>
DimensionVerdict HomologicalOracle<F>::self_injective_dimension(std::size_t cap) const {
  return injective_dimension(regular(), cap);
}

template <class F>
DimensionVerdict HomologicalOracle<F>::global_dimension(std::size_t cap) const {
  return verdict_from(ext_dims(top_, top_, cap + 1), cap);
}

template <class F>
typename HomologicalOracle<F>::Dimensions HomologicalOracle<F>::dimensions(std::size_t cap) const {
  const auto trace = resolve(top_, cap + 2);
  return {verdict_from(ext_dims(trace, regular(), cap + 1), cap), verdict_from(ext_dims(trace, top_, cap + 1), cap)};
}

template <class F>
bool HomologicalOracle<F>::is_projective(const ModuleRep<F>& m) const {
  return ext_dims(m, top_, 1)[1] == 0;
}

template <class F>
DimensionVerdict injective_dimension(const FiniteDimAlgebra<F>& a, Side side, std::size_t cap) {
  if (side == Side::Left) return HomologicalOracle<F>(a).self_injective_dimension(cap);
  return HomologicalOracle<F>(opposite(a)).self_injective_dimension(cap);
}

template <class F>
DimensionVerdict global_dimension(const FiniteDimAlgebra<F>& a, std::size_t cap) {
  return HomologicalOracle<F>(a).global_dimension(cap);
}

template <class F>
DimensionVerdict projective_dimension(const FiniteDimAlgebra<F>& a, const ModuleRep<F>& m, std::size_t cap) {
  return HomologicalOracle<F>(a).projective_dimension(m, cap);
}

template <class F>
bool is_module_projective(const FiniteDimAlgebra<F>& a, const ModuleRep<F>& m) {
  return HomologicalOracle<F>(a).is_projective(m);
}

template <class F>
ResolutionTrace<F> free_resolution(const FiniteDimAlgebra<F>& a, const ModuleRep<F>& m, std::size_t cap,
                                   std::uint64_t seed) {
  return HomologicalOracle<F>(a).resolve(m, cap, seed);
}

template <class F>
std::vector<std::size_t> ext_dims(const FiniteDimAlgebra<F>& a, const ModuleRep<F>& n, const ModuleRep<F>& m,
                                  std::size_t cap, std::uint64_t seed) {
  return HomologicalOracle<F>(a).ext_dims(n, m, cap, seed);
}

template <class F>
GorensteinVerdict is_gorenstein_oracle(const FiniteDimAlgebra<F>& a, std::size_t cap) {
  HomologicalOracle<F> left(a);
  HomologicalOracle<F> right(opposite(a), left.radical());
  const auto dims = left.dimensions(cap);
  GorensteinVerdict out;
  out.left = dims.self_injective;
  out.global = dims.global;
  out.right = right.self_injective_dimension(cap);
  if (out.left.finite() && out.right.finite() && out.left.value != out.right.value)
    throw ZaksViolation("self-injective dimensions differ: left " + out.left.to_string() + ", right " +
                        out.right.to_string());
  out.gorenstein = out.left.finite() && out.right.finite();
  return out;
}

#define EICAT_INSTANTIATE(F)                                                                                       \
  template RowSpace<F> radical(const FiniteDimAlgebra<F>&);                                                        \
  template ModuleRep<F> top_module(const FiniteDimAlgebra<F>&, const RowSpace<F>&);                                \
  template ModuleRep<F> top_module(const FiniteDimAlgebra<F>&);                                                    \
  template class HomologicalOracle<F>;                                                                             \
  template DimensionVerdict injective_dimension(const FiniteDimAlgebra<F>&, Side, std::size_t);                   \
  template DimensionVerdict global_dimension(const FiniteDimAlgebra<F>&, std::size_t);                            \
  template DimensionVerdict projective_dimension(const FiniteDimAlgebra<F>&, const ModuleRep<F>&, std::size_t);   \
  template bool is_module_projective(const FiniteDimAlgebra<F>&, const ModuleRep<F>&);                            \
  template ResolutionTrace<F> free_resolution(const FiniteDimAlgebra<F>&, const ModuleRep<F>&, std::size_t,       \
                                              std::uint64_t);                                                      \
  template std::vector<std::size_t> ext_dims(const FiniteDimAlgebra<F>&, const ModuleRep<F>&, const ModuleRep<F>&, \
                                             std::size_t, std::uint64_t);                                          \
  template GorensteinVerdict is_gorenstein_oracle(const FiniteDimAlgebra<F>&, std::size_t);

EICAT_INSTANTIATE(PrimeField)
EICAT_INSTANTIATE(RationalField)

}  // namespace eicat
