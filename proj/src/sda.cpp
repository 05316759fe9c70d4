#include "zetalie/sda.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "zetalie/linalg.hpp"
#include "zetalie/mpreal.hpp"

namespace zetalie::sda {

using freelie::IntPoly;
using freelie::LyndonBasis;
using freelie::NcPoly;
using freelie::Word;
using linalg::QVec;

namespace {

using Dense = std::vector<int64_t>;

size_t ipow(size_t b, int e) {
  size_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

size_t word_rank2(const Word& w) {
  size_t r = 0;
  for (char c : w) r = r * 2 + static_cast<unsigned char>(c);
  return r;
}

Dense dense2_from_intpoly(const IntPoly& p, int weight) {
  Dense out(ipow(2, weight), 0);
  for (const auto& [w, c] : p) out[word_rank2(w)] = c;
  return out;
}

// a*b - b*a over the 2-letter alphabet
Dense dense2_bracket(const Dense& a, const Dense& b) {
  Dense out(a.size() * b.size(), 0);
  size_t na = a.size(), nb = b.size();
  for (size_t i = 0; i < na; ++i) {
    if (!a[i]) continue;
    int64_t* row = out.data() + i * nb;
    for (size_t j = 0; j < nb; ++j)
      if (b[j]) row[j] = checked_madd(row[j], a[i], b[j]);
  }
  for (size_t j = 0; j < nb; ++j) {
    if (!b[j]) continue;
    int64_t* row = out.data() + j * na;
    for (size_t i = 0; i < na; ++i)
      if (a[i]) row[i] = checked_madd(row[i], -b[j], a[i]);
  }
  return out;
}

// Images of every Lyndon basis element of weights 1..w under the substitution
// x -> imgx, y -> imgy (degree-1 images), via the bracketing trees.
std::vector<std::vector<Dense>> subst2_layers(int weight, const Dense& imgx, const Dense& imgy) {
  std::vector<std::vector<Dense>> layers(weight);
  layers[0] = {imgx, imgy};
  for (int v = 2; v <= weight; ++v) {
    const auto& bv = LyndonBasis::get(v, 2);
    layers[v - 1].reserve(bv.words.size());
    for (size_t e = 0; e < bv.words.size(); ++e) {
      int s = bv.split[e];
      const auto& bl = LyndonBasis::get(s, 2);
      const auto& br = LyndonBasis::get(v - s, 2);
      layers[v - 1].push_back(dense2_bracket(layers[s - 1][bl.index.at(bv.words[e].substr(0, s))],
                                             layers[v - s - 1][br.index.at(bv.words[e].substr(s))]));
    }
  }
  return layers;
}

const Dense kX = {1, 0}, kY = {0, 1}, kZ = {-1, -1};

// Constraint columns, one dense array per Lyndon basis element.
struct Sections {
  std::vector<const std::vector<Dense>*> parts;
  size_t ncols = 0;

  size_t total_rows() const {
    size_t t = 0;
    for (const auto* s : parts) t += (*s)[0].size();
    return t;
  }
};

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct RowHash {
  std::array<uint32_t, 3> slot;
  std::array<int8_t, 3> sign;
};

RowHash row_hash(uint64_t seed, int section, size_t word, size_t n_slots) {
  uint64_t h = splitmix64(seed ^ (static_cast<uint64_t>(section) << 48) ^ word);
  RowHash r;
  for (int k = 0; k < 3; ++k) {
    r.slot[k] = static_cast<uint32_t>((h >> (k * 21)) % n_slots);
    r.sign[k] = (h >> (60 + k)) & 1 ? 1 : -1;
  }
  return r;
}

// Exact kernel of the stacked constraint system, certified: candidates come
// from a random sparse compression of the rows, and every candidate is then
// verified against every original row exactly. A failed verification feeds
// the violated row back into the exact subsystem, so the loop terminates with
// a fully certified kernel (or empty).
std::vector<QVec> certified_kernel(const Sections& sec, int threads, uint64_t seed = 12345) {
  const size_t ncols = sec.ncols;
  if (ncols == 0) return {};
  const size_t n_slots = ncols + 64;

  // compress rows: comp[slot][e], int128 accumulation is exact
  std::vector<std::vector<__int128>> comp(n_slots, std::vector<__int128>(ncols, 0));
  auto compress_col = [&](size_t e) {
    for (size_t s = 0; s < sec.parts.size(); ++s) {
      const Dense& col = (*sec.parts[s])[e];
      for (size_t word = 0; word < col.size(); ++word) {
        int64_t v = col[word];
        if (!v) continue;
        RowHash h = row_hash(seed, static_cast<int>(s), word, n_slots);
        for (int k = 0; k < 3; ++k) comp[h.slot[k]][e] += h.sign[k] * static_cast<__int128>(v);
      }
    }
  };
  {
    std::vector<std::thread> pool;
    int nt = std::max(1, threads);
    std::atomic<size_t> next{0};
    auto worker = [&]() {
      while (true) {
        size_t e = next.fetch_add(1);
        if (e >= ncols) break;
        compress_col(e);
      }
    };
    for (int t = 0; t < nt; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  auto int128_to_rat = [](__int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
    Int z;
    mpz_import(z.get_mpz_t(), 2, -1, 8, 0, 0, &u);
    if (neg) z = -z;
    return Rat(z);
  };

  // pick independent compressed rows mod p
  linalg::Mod64 f{linalg::screening_primes(1, seed)[0]};
  linalg::ModEchelon ech(f, static_cast<int>(ncols));
  for (size_t r = 0; r < n_slots; ++r) {
    std::vector<uint64_t> row(ncols);
    for (size_t e = 0; e < ncols; ++e) {
      __int128 v = comp[r][e];
      int64_t m = static_cast<int64_t>(v % static_cast<__int128>(f.p));
      row[e] = f.from_int64(m);
    }
    ech.feed(std::move(row), static_cast<int64_t>(r));
  }

  std::vector<QVec> exact_rows;
  for (int64_t tag : ech.pivot_tags()) {
    QVec row(ncols);
    for (size_t e = 0; e < ncols; ++e) row[e] = int128_to_rat(comp[tag][e]);
    exact_rows.push_back(std::move(row));
  }

  for (int round = 0;; ++round) {
    if (round > 64) throw ResourceError("certified_kernel: verification did not stabilize");
    auto ker = linalg::kernel_basis(exact_rows, static_cast<int>(ncols));
    if (ker.empty()) return {};
    bool violated = false;
    for (const auto& kv : ker) {
      auto kint = primitive_integer_vector(kv);
      bool fits = true;
      for (const auto& z : kint)
        if (!z.fits_slong_p()) fits = false;
      for (size_t s = 0; s < sec.parts.size() && !violated; ++s) {
        const auto& cols = *sec.parts[s];
        size_t len = cols[0].size();
        if (fits) {
          std::vector<__int128> acc(len, 0);
          for (size_t e = 0; e < ncols; ++e) {
            long ke = kint[e].get_si();
            if (!ke) continue;
            const Dense& col = cols[e];
            for (size_t word = 0; word < len; ++word)
              if (col[word]) acc[word] += static_cast<__int128>(ke) * col[word];
          }
          for (size_t word = 0; word < len && !violated; ++word) {
            if (acc[word] != 0) {
              QVec row(ncols);
              for (size_t e = 0; e < ncols; ++e) row[e] = Rat(static_cast<long>(cols[e][word]));
              exact_rows.push_back(std::move(row));
              violated = true;
            }
          }
        } else {
          std::vector<Int> acc(len, Int(0));
          for (size_t e = 0; e < ncols; ++e) {
            if (kint[e] == 0) continue;
            const Dense& col = cols[e];
            for (size_t word = 0; word < len; ++word)
              if (col[word]) acc[word] += kint[e] * static_cast<long>(col[word]);
          }
          for (size_t word = 0; word < len && !violated; ++word) {
            if (acc[word] != 0) {
              QVec row(ncols);
              for (size_t e = 0; e < ncols; ++e) row[e] = Rat(static_cast<long>(cols[e][word]));
              exact_rows.push_back(std::move(row));
              violated = true;
            }
          }
        }
        if (violated) break;
      }
      if (violated) break;
    }
    if (!violated) return ker;
  }
}

// column order: y-degree ascending, then lexicographic
std::vector<int> depth_column_order(int w) {
  const auto& basis = LyndonBasis::get(w, 2);
  std::vector<int> order(basis.words.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    int da = static_cast<int>(std::count(basis.words[a].begin(), basis.words[a].end(), '\1'));
    int db = static_cast<int>(std::count(basis.words[b].begin(), basis.words[b].end(), '\1'));
    return da < db;
  });
  return order;
}

int ydeg_of(const Word& w) {
  return static_cast<int>(std::count(w.begin(), w.end(), '\1'));
}

}  // namespace

// Build the per-condition constraint columns for weight w.
struct ColumnBundle {
  std::vector<Dense> colI, colII, colIIP;
};

static ColumnBundle build_two_letter_columns(int w, bool want_i, bool want_ii, bool want_iip) {
  const auto& basis = LyndonBasis::get(w, 2);
  size_t n = basis.words.size();
  ColumnBundle b;
  std::vector<Dense> expansion(n);
  for (size_t e = 0; e < n; ++e) expansion[e] = dense2_from_intpoly(basis.expansion[e], w);
  if (want_i) {
    auto swap_layers = subst2_layers(w, kY, kX);
    b.colI.resize(n);
    for (size_t e = 0; e < n; ++e) {
      Dense c = expansion[e];
      const Dense& s = swap_layers[w - 1][e];
      for (size_t t = 0; t < c.size(); ++t) c[t] = checked_add(c[t], s[t]);
      b.colI[e] = std::move(c);
    }
  }
  if (want_ii) {
    auto yz = subst2_layers(w, kY, kZ);
    auto zx = subst2_layers(w, kZ, kX);
    b.colII.resize(n);
    for (size_t e = 0; e < n; ++e) {
      Dense c = expansion[e];
      for (size_t t = 0; t < c.size(); ++t)
        c[t] = checked_add(c[t], checked_add(yz[w - 1][e][t], zx[w - 1][e][t]));
      b.colII[e] = std::move(c);
    }
  }
  if (want_iip) {
    // (ii)': [y, f(x,y)] + [z, f(x,z)] = 0 at z = -x-y, rows in weight w+1
    auto xz = subst2_layers(w, kX, kZ);
    b.colIIP.resize(n);
    for (size_t e = 0; e < n; ++e) {
      Dense c = dense2_bracket(kY, expansion[e]);
      Dense c2 = dense2_bracket(kZ, xz[w - 1][e]);
      for (size_t t = 0; t < c.size(); ++t) c[t] = checked_add(c[t], c2[t]);
      b.colIIP[e] = std::move(c);
    }
  }
  return b;
}

const p5::IiiColumns& Context::iii_columns(int w) {
  auto it = cols_.find(w);
  if (it == cols_.end()) {
    auto ptr = std::make_shared<p5::IiiColumns>(p5::assemble_iii_columns(w, threads_));
    it = cols_.emplace(w, std::move(ptr)).first;
  }
  return *it->second;
}

void Context::drop_columns(int w) { cols_.erase(w); }

int Context::solve_dimension(int w, const ConditionSet& conds) {
  if (w < 2) return 0;
  ColumnBundle bundle = build_two_letter_columns(w, conds.use_i, conds.use_ii, conds.use_ii_prime);
  Sections sec;
  sec.ncols = LyndonBasis::get(w, 2).words.size();
  if (conds.use_i) sec.parts.push_back(&bundle.colI);
  if (conds.use_ii) sec.parts.push_back(&bundle.colII);
  if (conds.use_ii_prime) sec.parts.push_back(&bundle.colIIP);
  if (conds.use_iii) {
    const auto& iii = iii_columns(w);
    sec.parts.push_back(&iii.colP);
    sec.parts.push_back(&iii.colQ);
  }
  auto ker = certified_kernel(sec, threads_);
  return static_cast<int>(ker.size());
}

const WeightData& Context::weight_data(int w) {
  auto it = solved_.find(w);
  if (it != solved_.end()) return it->second;

  WeightData wd;
  wd.weight = w;
  const auto& basis = LyndonBasis::get(std::max(w, 1), 2);
  int max_m = w / 2 + 1;
  if (w < 2) {
    wd.filtration_dims.assign(std::max(max_m, 1), 0);
    return solved_.emplace(w, std::move(wd)).first->second;
  }

  ColumnBundle bundle = build_two_letter_columns(w, true, true, false);
  Sections sec;
  sec.ncols = basis.words.size();
  const auto& iii = iii_columns(w);
  sec.parts = {&bundle.colI, &bundle.colII, &iii.colP, &iii.colQ};
  auto ker = certified_kernel(sec, threads_);

  // echelonize along the depth filtration so that F^m bases are basis suffixes
  auto order = depth_column_order(w);
  auto ech = linalg::echelon_with_order(std::move(ker), order);
  for (const auto& v : ech) wd.basis.push_back(derivation_from_coords_internal(w, v));

  wd.filtration_dims.assign(max_m, 0);
  for (const auto& d : wd.basis) {
    // minimal y-degree with a nonzero coordinate
    int mindeg = w;
    for (size_t e = 0; e < d.coords.size(); ++e)
      if (d.coords[e] != 0) mindeg = std::min(mindeg, ydeg_of(basis.words[e]));
    for (int m = 1; m <= std::min(mindeg, max_m); ++m) wd.filtration_dims[m - 1]++;
  }
  return solved_.emplace(w, std::move(wd)).first->second;
}

Derivation Context::derivation_from_coords_internal(int w, const std::vector<Rat>& coords) {
  Derivation d;
  d.weight = w;
  d.coords = coords;
  d.f = freelie::from_lyndon_coords(coords, w, 2);
  const auto& basis = LyndonBasis::get(w, 2);
  d.depth_profile.assign(w + 1, 0);
  for (size_t e = 0; e < coords.size(); ++e)
    if (coords[e] != 0) d.depth_profile[ydeg_of(basis.words[e])]++;
  // (ad x)^{w-1}(y) is the bracketing of the Lyndon word x^{w-1}y, index 0
  d.c_value = w >= 2 ? coords[0] : Rat(0);
  return d;
}

Derivation Context::derivation_from_coords(int w, const std::vector<Rat>& coords) {
  return derivation_from_coords_internal(w, coords);
}

bool Context::satisfies_conditions(int w, const std::vector<Rat>& coords) {
  if (w < 2) return false;
  NcPoly f = freelie::from_lyndon_coords(coords, w, 2);
  if (f.empty()) return true;
  // (i) and (ii) in the two-letter algebra, exactly
  auto subst = [&](const NcPoly& g, const NcPoly& ix, const NcPoly& iy) {
    std::vector<NcPoly> images = {ix, iy};
    return freelie::lie_substitute_homogeneous<NcPoly>(
        g, w, 2, images, [](const NcPoly& a, const NcPoly& b) { return freelie::nc_bracket(a, b); },
        [](NcPoly& acc, const Rat& c, const NcPoly& v) { freelie::nc_add_inplace(acc, v, c); },
        NcPoly{});
  };
  NcPoly px{{Word(1, 0), Rat(1)}};
  NcPoly py{{Word(1, 1), Rat(1)}};
  NcPoly pz{{Word(1, 0), Rat(-1)}, {Word(1, 1), Rat(-1)}};
  NcPoly c1 = f;
  freelie::nc_add_inplace(c1, subst(f, py, px));
  if (!c1.empty()) return false;
  NcPoly c2 = f;
  freelie::nc_add_inplace(c2, subst(f, py, pz));
  freelie::nc_add_inplace(c2, subst(f, pz, px));
  if (!c2.empty()) return false;
  // (iii) against the assembled columns
  auto kint = primitive_integer_vector(coords);
  return p5::cycle_sum_vanishes(iii_columns(w), kint);
}

Derivation Context::bracket(const Derivation& a, const Derivation& b) {
  int w = a.weight + b.weight;
  // D_f as a derivation: x -> 0, y -> [y, f]; h = [f,g] + D_f(g) - D_g(f)
  NcPoly py{{Word(1, 1), Rat(1)}};
  auto apply_D = [&](const NcPoly& f, const NcPoly& g, int wg) {
    NcPoly yf = freelie::nc_bracket(py, f);
    std::vector<NcPoly> images = {NcPoly{}, yf};
    // derivation through the Lyndon trees of g: D([u,v]) = [D u, v] + [u, D v]
    struct Node {
      NcPoly val;
      NcPoly dval;
    };
    const auto& bw = LyndonBasis::get(wg, 2);
    auto coords = freelie::lyndon_coords(g, wg, 2);
    std::map<Word, Node> memo;
    for (int v = 1; v <= wg; ++v) {
      const auto& bv = LyndonBasis::get(v, 2);
      for (size_t e = 0; e < bv.words.size(); ++e) {
        const Word& wrd = bv.words[e];
        Node n;
        if (v == 1) {
          n.val = NcPoly{{wrd, Rat(1)}};
          n.dval = images[static_cast<unsigned char>(wrd[0])];
        } else {
          int s = bv.split[e];
          const Node& l = memo.at(wrd.substr(0, s));
          const Node& r = memo.at(wrd.substr(s));
          n.val = freelie::nc_bracket(l.val, r.val);
          n.dval = freelie::nc_bracket(l.dval, r.val);
          freelie::nc_add_inplace(n.dval, freelie::nc_bracket(l.val, r.dval));
        }
        memo.emplace(wrd, std::move(n));
      }
    }
    NcPoly out;
    for (size_t e = 0; e < coords.size(); ++e)
      if (coords[e] != 0) freelie::nc_add_inplace(out, memo.at(bw.words[e]).dval, coords[e]);
    return out;
  };
  NcPoly h = freelie::nc_bracket(a.f, b.f);
  freelie::nc_add_inplace(h, apply_D(a.f, b.f, b.weight));
  freelie::nc_add_inplace(h, apply_D(b.f, a.f, a.weight), Rat(-1));
  auto coords = freelie::lyndon_coords(h, w, 2);
  if (!satisfies_conditions(w, coords))
    throw std::logic_error("sda bracket result fails the defining conditions");
  return derivation_from_coords_internal(w, coords);
}

Rat Context::c_functional(const Derivation& d) const { return d.c_value; }

IharaTakaoReport Context::ihara_takao() {
  auto pick = [&](int w) {
    const auto& wd = weight_data(w);
    if (wd.basis.empty() || wd.basis[0].c_value != 1)
      throw std::logic_error("ihara_takao: expected a c-normalized generator");
    return wd.basis[0];
  };
  Derivation f3 = pick(3), f5 = pick(5), f7 = pick(7), f9 = pick(9);
  Derivation b1 = bracket(f3, f9);
  Derivation b2 = bracket(f5, f7);
  const auto& basis12 = LyndonBasis::get(12, 2);

  IharaTakaoReport rep;
  auto vanishes_below = [&](const Derivation& d, int m) {
    for (size_t e = 0; e < d.coords.size(); ++e)
      if (d.coords[e] != 0 && ydeg_of(basis12.words[e]) < m) return false;
    return true;
  };
  rep.both_in_f2 = vanishes_below(b1, 2) && vanishes_below(b2, 2);

  // a*b1 + b*b2 with all y-degree <= 2 coordinates zero
  std::vector<QVec> rows;
  for (size_t e = 0; e < basis12.words.size(); ++e) {
    if (ydeg_of(basis12.words[e]) >= 3) continue;
    QVec row = {b1.coords[e], b2.coords[e]};
    if (row[0] != 0 || row[1] != 0) rows.push_back(std::move(row));
  }
  auto ker = linalg::kernel_basis(std::move(rows), 2);
  rep.unique_up_to_scale = ker.size() == 1;
  if (!ker.empty()) {
    auto ab = primitive_integer_vector(ker[0]);
    rep.a = ab[0];
    rep.b = ab[1];
    std::vector<Rat> combo(basis12.words.size());
    for (size_t e = 0; e < combo.size(); ++e)
      combo[e] = Rat(rep.a) * b1.coords[e] + Rat(rep.b) * b2.coords[e];
    Derivation comb = derivation_from_coords_internal(12, combo);
    rep.combination_in_f3 = vanishes_below(comb, 3);
    rep.combination_in_f4 = vanishes_below(comb, 4);
  }
  return rep;
}

std::vector<int> Context::dimension_row(int max_weight) {
  std::vector<int> out;
  for (int w = 1; w <= max_weight; ++w) out.push_back(weight_data(w).dim());
  return out;
}

std::vector<std::vector<int>> Context::filtration_table(int max_weight, int max_m) {
  std::vector<std::vector<int>> table(max_m, std::vector<int>(max_weight, 0));
  for (int w = 1; w <= max_weight; ++w) {
    const auto& wd = weight_data(w);
    for (int m = 1; m <= max_m; ++m)
      table[m - 1][w - 1] =
          m <= static_cast<int>(wd.filtration_dims.size()) ? wd.filtration_dims[m - 1] : 0;
  }
  return table;
}

NzBoundTable Context::nz_bounds(int max_weight) {
  NzBoundTable t;
  t.max_weight = max_weight;
  t.bound.assign(4, std::vector<int>(max_weight, 0));
  t.total.assign(max_weight, 0);
  for (int w = 1; w <= max_weight; ++w) {
    const auto& wd = weight_data(w);
    t.total[w - 1] = wd.dim();
    for (int m = 1; m <= 4; ++m) {
      int fm1 = m + 1 <= static_cast<int>(wd.filtration_dims.size())
                    ? wd.filtration_dims[m]
                    : 0;
      t.bound[m - 1][w - 1] = wd.dim() - fm1;
    }
  }
  return t;
}

std::vector<Int> Context::dprime_sequence(int max_weight) {
  // 1/(1-t^2) * prod_w (1-t^w)^{-dim D_w}, coefficients through t^max
  std::vector<Int> series(max_weight + 1, Int(0));
  series[0] = 1;
  auto mul_inv_one_minus_tw = [&](int w, int times) {
    for (int rep = 0; rep < times; ++rep)
      for (int k = w; k <= max_weight; ++k) series[k] += series[k - w];
  };
  mul_inv_one_minus_tw(2, 1);
  for (int w = 1; w <= max_weight; ++w) {
    int d = weight_data(w).dim();
    if (d > 0) mul_inv_one_minus_tw(w, d);
  }
  return series;
}

std::vector<Int> d_sequence(int max_weight) {
  std::vector<Int> d(max_weight + 1);
  for (int w = 0; w <= max_weight; ++w) {
    if (w == 0) d[w] = 1;
    else if (w == 1) d[w] = 0;
    else if (w == 2) d[w] = 1;
    else d[w] = d[w - 2] + d[w - 3];
  }
  return d;
}

std::vector<double> d_closed_form_deviation(int max_weight, long digits) {
  mpfr_prec_t prec = MpReal::bits_for_digits(digits);
  // real root of x^3 - x - 1 by Newton
  MpReal alpha(1.3247, prec);
  for (int it = 0; it < 200; ++it) {
    MpReal f = alpha * alpha * alpha - alpha - MpReal(1L, prec);
    MpReal fp = MpReal(3L, prec) * alpha * alpha - MpReal(1L, prec);
    alpha -= f / fp;
  }
  // beta, gamma roots of x^2 + alpha x + (alpha^2 - 1)
  MpReal disc = MpReal(4L, prec) - MpReal(3L, prec) * alpha * alpha;  // negative
  MpReal imag = (-disc).sqrt() / MpReal(2L, prec);
  MpComplex beta{-alpha / MpReal(2L, prec), imag};
  MpComplex gamma{-alpha / MpReal(2L, prec), -imag};
  MpComplex al{alpha, MpReal(0L, prec)};

  auto cpow = [&](MpComplex base, int e) {
    MpComplex r{MpReal(1L, prec), MpReal(0L, prec)};
    for (int i = 0; i < e; ++i) r = r * base;
    return r;
  };
  MpComplex denom = (al - beta) * (beta - gamma) * (gamma - al);
  auto d = d_sequence(max_weight);
  std::vector<double> dev;
  for (int w = 0; w <= max_weight; ++w) {
    MpComplex num = cpow(al, w + 2) * (beta - gamma) + cpow(beta, w + 2) * (gamma - al) +
                    cpow(gamma, w + 2) * (al - beta);
    // d_w = -num/denom
    MpComplex q = num * MpComplex{denom.re, -denom.im};
    MpReal n2 = denom.re * denom.re + denom.im * denom.im;
    MpReal val = -(q.re / n2);
    MpReal diff = (val - MpReal(d[w], prec)).abs();
    dev.push_back(diff.to_double());
  }
  return dev;
}

}  // namespace zetalie::sda
