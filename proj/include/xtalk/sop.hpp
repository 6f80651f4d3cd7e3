#pragma once

/*!
  \file sop.hpp
  \brief Sum-of-products algebra over local variables (fanin slots).

  Functions are kept in a reduced canonical form: no contradictory or
  duplicate cubes, no cube absorbed by another, adjacent cubes merged.
  The empty cube list is constant 0; a list holding the empty cube is
  constant 1.
*/

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace xtalk {

/*! \brief Base error type for the library. */
class error : public std::runtime_error {
public:
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/*! \brief A variable occurrence with polarity. */
struct literal {
  uint32_t var = 0;
  bool complemented = false;

  friend auto operator<=>(const literal&, const literal&) = default;
};

inline literal operator~(literal l) { return {l.var, !l.complemented}; }

/*! \brief Product term over up to 64 variables, at most one polarity each. */
struct cube {
  uint64_t pos = 0; ///< bit v: variable v occurs positively
  uint64_t neg = 0; ///< bit v: variable v occurs complemented

  static cube of(std::initializer_list<literal> lits);

  bool has(literal l) const {
    return ((l.complemented ? neg : pos) >> l.var) & 1;
  }
  bool contradictory() const { return (pos & neg) != 0; }
  bool empty() const { return pos == 0 && neg == 0; }
  uint64_t support() const { return pos | neg; }
  int literal_count() const;
  /// true when this cube's literal set is contained in c's
  bool subcube_of(const cube& c) const {
    return (pos & ~c.pos) == 0 && (neg & ~c.neg) == 0;
  }
  cube with(literal l) const;
  cube without(literal l) const;
  bool eval(uint64_t assignment) const {
    return (assignment & pos) == pos && (assignment & neg) == 0;
  }
  std::vector<literal> literals() const;

  friend auto operator<=>(const cube&, const cube&) = default;
};

/*! \brief Sum of products in reduced canonical form. */
struct sop {
  std::vector<cube> cubes;

  sop() = default;
  explicit sop(std::vector<cube> cs) : cubes(std::move(cs)) { normalize(); }

  static sop constant(bool value);
  static sop lit(literal l);
  static sop lit(uint32_t var, bool complemented = false) {
    return lit(literal{var, complemented});
  }

  bool is_const0() const { return cubes.empty(); }
  bool is_const1() const { return cubes.size() == 1 && cubes[0].empty(); }
  bool is_const() const { return is_const0() || is_const1(); }
  std::optional<literal> as_single_literal() const;

  uint64_t support() const;
  int support_size() const;
  bool eval(uint64_t assignment) const;
  /// truth table over variables 0..num_vars-1 (num_vars <= 6); bit i = value
  /// under the assignment whose bit k gives variable k
  uint64_t truth_table(unsigned num_vars) const;

  /// reduce to canonical form (sorted, absorbed, merged)
  void normalize();

  sop remapped(const std::vector<uint32_t>& var_map) const;
  /// substitute a constant for a variable (no error if absent)
  sop restricted(uint32_t var, bool value) const;

  friend auto operator<=>(const sop&, const sop&) = default;
};

/// number of distinct (variable, polarity) pairs occurring in f
int literal_count(const sop& f);

/// f with l asserted true; error when l's variable does not occur in f
sop cofactor(const sop& f, literal l);

/// exact complement of f (at most 3 distinct variables), as a minimal cover
sop complement_demorgan(const sop& f);

/// minimal two-level cover of a truth table over num_vars <= 4 variables;
/// deterministic: fewest cubes, then fewest literals, then lexicographic
sop exact_cover(uint64_t tt, unsigned num_vars);

// general algebra (used by the expression parser; may grow the cover)
sop sop_and(const sop& a, const sop& b);
sop sop_or(const sop& a, const sop& b);
sop sop_not(const sop& a);

/// render with variable names, "a·b' + c" style ("*" as separator)
std::string to_string(const sop& f, const std::vector<std::string>& names);

} // namespace xtalk
