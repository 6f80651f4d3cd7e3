#include "xtalk/sop.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cassert>

namespace xtalk {

namespace {

constexpr size_t kCubeLimit = 1u << 16; // growth guard for general algebra

} // namespace

cube cube::of(std::initializer_list<literal> lits) {
  cube c;
  for (auto l : lits) {
    if (l.complemented)
      c.neg |= uint64_t{1} << l.var;
    else
      c.pos |= uint64_t{1} << l.var;
  }
  return c;
}

int cube::literal_count() const {
  return std::popcount(pos) + std::popcount(neg);
}

cube cube::with(literal l) const {
  cube c = *this;
  (l.complemented ? c.neg : c.pos) |= uint64_t{1} << l.var;
  return c;
}

cube cube::without(literal l) const {
  cube c = *this;
  (l.complemented ? c.neg : c.pos) &= ~(uint64_t{1} << l.var);
  return c;
}

std::vector<literal> cube::literals() const {
  std::vector<literal> out;
  for (uint64_t m = support(); m;) {
    uint32_t v = std::countr_zero(m);
    m &= m - 1;
    if ((pos >> v) & 1)
      out.push_back({v, false});
    if ((neg >> v) & 1)
      out.push_back({v, true});
  }
  return out;
}

sop sop::constant(bool value) {
  sop f;
  if (value)
    f.cubes.push_back(cube{});
  return f;
}

sop sop::lit(literal l) {
  sop f;
  f.cubes.push_back(cube{}.with(l));
  return f;
}

std::optional<literal> sop::as_single_literal() const {
  if (cubes.size() != 1 || cubes[0].literal_count() != 1)
    return std::nullopt;
  return cubes[0].literals()[0];
}

uint64_t sop::support() const {
  uint64_t s = 0;
  for (const auto& c : cubes)
    s |= c.support();
  return s;
}

int sop::support_size() const { return std::popcount(support()); }

bool sop::eval(uint64_t assignment) const {
  for (const auto& c : cubes)
    if (c.eval(assignment))
      return true;
  return false;
}

uint64_t sop::truth_table(unsigned num_vars) const {
  assert(num_vars <= 6);
  uint64_t tt = 0;
  for (uint64_t i = 0; i < (uint64_t{1} << num_vars); ++i)
    if (eval(i))
      tt |= uint64_t{1} << i;
  return tt;
}

void sop::normalize() {
  std::erase_if(cubes, [](const cube& c) { return c.contradictory(); });
  std::sort(cubes.begin(), cubes.end());
  cubes.erase(std::unique(cubes.begin(), cubes.end()), cubes.end());

  // Fixpoint of two reductions:
  //  absorption      a ⊆ b        => drop b
  //  single-literal  a + x'b …    => when exactly one literal of b is
  //  reduction       complemented in a and the rest of a is inside b,
  //                  drop that literal from b
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < cubes.size() && !changed; ++i) {
      for (size_t j = 0; j < cubes.size() && !changed; ++j) {
        if (i == j)
          continue;
        const cube& a = cubes[i];
        cube& b = cubes[j];
        if (a.subcube_of(b)) {
          cubes.erase(cubes.begin() + j);
          changed = true;
          break;
        }
        uint64_t clash = (a.pos & b.neg) | (a.neg & b.pos);
        if (std::popcount(clash) == 1) {
          cube a_rest{a.pos & ~clash, a.neg & ~clash};
          cube b_rest{b.pos & ~clash, b.neg & ~clash};
          if (a_rest.subcube_of(b_rest)) {
            b = b_rest;
            changed = true;
          }
        }
      }
    }
    if (changed) {
      std::sort(cubes.begin(), cubes.end());
      cubes.erase(std::unique(cubes.begin(), cubes.end()), cubes.end());
    }
  }
}

sop sop::remapped(const std::vector<uint32_t>& var_map) const {
  sop out;
  out.cubes.reserve(cubes.size());
  for (const auto& c : cubes) {
    cube nc;
    for (auto l : c.literals())
      nc = nc.with({var_map.at(l.var), l.complemented});
    out.cubes.push_back(nc);
  }
  out.normalize();
  return out;
}

sop sop::restricted(uint32_t var, bool value) const {
  uint64_t bit = uint64_t{1} << var;
  sop out;
  for (const auto& c : cubes) {
    bool sat_pos = (c.pos & bit) != 0;
    bool sat_neg = (c.neg & bit) != 0;
    if ((sat_pos && !value) || (sat_neg && value))
      continue; // cube falsified
    cube nc = c;
    nc.pos &= ~bit;
    nc.neg &= ~bit;
    out.cubes.push_back(nc);
  }
  out.normalize();
  return out;
}

int literal_count(const sop& f) {
  uint64_t pos = 0, neg = 0;
  for (const auto& c : f.cubes) {
    pos |= c.pos;
    neg |= c.neg;
  }
  return std::popcount(pos) + std::popcount(neg);
}

sop cofactor(const sop& f, literal l) {
  if ((f.support() >> l.var & 1) == 0)
    throw error("cofactor: variable absent from function");
  sop out;
  for (const auto& c : f.cubes) {
    if (c.has(~l))
      continue;
    out.cubes.push_back(c.without(l));
  }
  out.normalize();
  return out;
}

namespace {

// all cubes over the given variables, canonical order: fewer literals first,
// then lexicographic
std::vector<cube> candidate_cubes(const std::vector<uint32_t>& vars) {
  std::vector<cube> out;
  size_t n = vars.size();
  for (uint32_t code = 0; code < 1u << (2 * n); ++code) {
    cube c;
    bool ok = true;
    for (size_t k = 0; k < n; ++k) {
      unsigned st = (code >> (2 * k)) & 3; // 0 absent, 1 pos, 2 neg
      if (st == 3) {
        ok = false;
        break;
      }
      if (st == 1)
        c = c.with({vars[k], false});
      else if (st == 2)
        c = c.with({vars[k], true});
    }
    if (ok)
      out.push_back(c);
  }
  std::sort(out.begin(), out.end(), [](const cube& a, const cube& b) {
    int la = a.literal_count(), lb = b.literal_count();
    if (la != lb)
      return la < lb;
    return a < b;
  });
  return out;
}

uint64_t cube_minterms(const cube& c, unsigned num_vars) {
  uint64_t m = 0;
  for (uint64_t i = 0; i < (uint64_t{1} << num_vars); ++i)
    if (c.eval(i))
      m |= uint64_t{1} << i;
  return m;
}

} // namespace

sop exact_cover(uint64_t tt, unsigned num_vars) {
  if (num_vars > 4)
    throw error("exact_cover: too many variables");
  uint64_t full = num_vars >= 6 ? ~uint64_t{0}
                                : (uint64_t{1} << (uint64_t{1} << num_vars)) - 1;
  tt &= full;
  if (tt == 0)
    return sop::constant(false);
  if (tt == full)
    return sop::constant(true);

  std::vector<uint32_t> vars;
  for (uint32_t v = 0; v < num_vars; ++v)
    vars.push_back(v);
  std::vector<cube> cands;
  std::vector<uint64_t> mins;
  for (const auto& c : candidate_cubes(vars)) {
    uint64_t m = cube_minterms(c, num_vars);
    if ((m & ~tt) == 0 && m != 0) {
      cands.push_back(c);
      mins.push_back(m);
    }
  }

  // search by cover size; ties broken by fewest literals then lexicographic
  std::vector<size_t> best;
  int best_lits = 0;
  std::vector<size_t> pick;
  auto lits_of = [&](const std::vector<size_t>& sel) {
    int n = 0;
    for (size_t j : sel)
      n += cands[j].literal_count();
    return n;
  };
  auto cubes_of = [&](const std::vector<size_t>& sel) {
    std::vector<cube> cs;
    for (size_t j : sel)
      cs.push_back(cands[j]);
    std::sort(cs.begin(), cs.end());
    return cs;
  };
  for (size_t size = 1; size <= cands.size(); ++size) {
    best.clear();
    auto rec = [&](auto&& self, size_t start, uint64_t covered) -> void {
      if (pick.size() == size) {
        if (covered == tt) {
          if (best.empty())
            best = pick, best_lits = lits_of(pick);
          else {
            int l = lits_of(pick);
            if (l < best_lits ||
                (l == best_lits && cubes_of(pick) < cubes_of(best)))
              best = pick, best_lits = l;
          }
        }
        return;
      }
      for (size_t j = start; j + (size - pick.size()) <= cands.size(); ++j) {
        pick.push_back(j);
        self(self, j + 1, covered | mins[j]);
        pick.pop_back();
      }
    };
    rec(rec, 0, 0);
    if (!best.empty()) {
      sop f;
      f.cubes = cubes_of(best);
      return f;
    }
  }
  throw error("exact_cover: unreachable"); // minterm cubes always cover
}

sop complement_demorgan(const sop& f) {
  uint64_t sup = f.support();
  unsigned nv = std::popcount(sup);
  if (nv > 3)
    throw error("complement_demorgan: more than 3 variables");
  if (f.is_const0())
    return sop::constant(true);
  if (f.is_const1())
    return sop::constant(false);

  // compress support to dense slots, complement the table, re-expand
  std::vector<uint32_t> vars;
  for (uint64_t m = sup; m;) {
    vars.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  std::vector<uint32_t> to_dense(64, 0);
  for (size_t k = 0; k < vars.size(); ++k)
    to_dense[vars[k]] = static_cast<uint32_t>(k);
  sop dense = f.remapped(to_dense);
  uint64_t tt = dense.truth_table(nv);
  uint64_t full = (uint64_t{1} << (uint64_t{1} << nv)) - 1;
  sop comp = exact_cover(~tt & full, nv);
  return comp.remapped(vars);
}

sop sop_or(const sop& a, const sop& b) {
  sop out;
  out.cubes = a.cubes;
  out.cubes.insert(out.cubes.end(), b.cubes.begin(), b.cubes.end());
  out.normalize();
  return out;
}

sop sop_and(const sop& a, const sop& b) {
  if (a.cubes.size() * b.cubes.size() > kCubeLimit)
    throw error("sop_and: expression too large");
  sop out;
  for (const auto& ca : a.cubes)
    for (const auto& cb : b.cubes) {
      cube c{ca.pos | cb.pos, ca.neg | cb.neg};
      if (!c.contradictory())
        out.cubes.push_back(c);
    }
  out.normalize();
  return out;
}

sop sop_not(const sop& a) {
  sop out = sop::constant(true);
  for (const auto& c : a.cubes) {
    sop clause; // De Morgan: complement of a cube is a sum of literals
    for (auto l : c.literals())
      clause.cubes.push_back(cube{}.with(~l));
    clause.normalize();
    out = sop_and(out, clause);
  }
  return out;
}

std::string to_string(const sop& f, const std::vector<std::string>& names) {
  if (f.is_const0())
    return "0";
  if (f.is_const1())
    return "1";
  std::string s;
  for (size_t i = 0; i < f.cubes.size(); ++i) {
    if (i)
      s += " + ";
    auto lits = f.cubes[i].literals();
    for (size_t j = 0; j < lits.size(); ++j) {
      if (j)
        s += "*";
      s += names.at(lits[j].var);
      if (lits[j].complemented)
        s += "'";
    }
  }
  return s;
}

} // namespace xtalk
