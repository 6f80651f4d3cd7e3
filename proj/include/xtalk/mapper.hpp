#pragma once

/*!
  \file mapper.hpp
  \brief Crosstalk technology mapping: classification against the gate
  library, common-literal factoring, De Morgan variant selection, inverted
  fanin absorption and redundancy removal.

  Per node the mapper picks the cheapest of: a direct library match, the
  factored form l*(f cofactor l), the De Morgan variant (two-literal
  functions), and a small set of NAND/NOR tree expansions. Costs follow
  Count = T + 2*I.
*/

#include "xtalk/cost.hpp"
#include "xtalk/gates.hpp"
#include "xtalk/mapped.hpp"
#include "xtalk/network.hpp"
#include "xtalk/sop.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace xtalk {

/*! \brief A library gate bound onto a node function. */
struct gate_match {
  gate_kind kind;
  std::vector<literal> pins; ///< pin j reads fanin slot pins[j].var, inverted
                             ///< when pins[j].complemented
  bool output_complemented = false;
};

/// membership test against S: the cheapest binding whose truth table equals
/// f's (fewest complemented pins, then library order); none when no member
/// matches; error above 3 fanin slots
std::optional<gate_match> classify(const sop& f, const gate_library& lib);

/// a literal present in every cube of f, or none; ties prefer the literal
/// whose cofactor classifies, then highest cube count, then lexicographic
std::optional<literal> find_common_literal(
    const sop& f, const gate_library& lib = gate_library::standard());

/// f = l * cofactor(f, l); error when l is missing from any cube
std::pair<literal, sop> factor_out(const sop& f, literal l);

/*! \brief Pin of a gate inside an implementation under construction. */
struct impl_pin {
  bool internal = false; ///< references an earlier gate of the same impl
  uint32_t index = 0;    ///< fanin slot or internal gate index
  bool complemented = false;

  friend auto operator<=>(const impl_pin&, const impl_pin&) = default;
};

inline impl_pin operator~(impl_pin p) {
  return {p.internal, p.index, !p.complemented};
}

struct impl_gate {
  gate_kind kind;
  std::vector<impl_pin> pins;
};

/*! \brief Gates realizing one node function; cost is Count = T + 2*I. */
struct implementation {
  std::vector<impl_gate> gates; ///< topologically ordered
  impl_pin out;                 ///< slot passthrough when gates is empty
  int cost = 0;
};

/// recompute Count = T + 2*I from the implementation's contents
int implementation_cost(const implementation& impl, const cost_table& costs);

/*! \brief Both candidates costed by the two-literal De Morgan rule. */
struct demorgan_choice {
  implementation direct;
  implementation variant;
  bool variant_chosen = false;
  const implementation& chosen() const { return variant_chosen ? variant : direct; }
};

demorgan_choice demorgan_candidates(const sop& f, const cost_table& costs);

/// direct vs inverted-function realization of a two-literal f, cheaper one
/// returned, direct kept on ties; error when literal_count(f) != 2
implementation choose_demorgan_variant(const sop& f, const cost_table& costs);

/// cheapest realization of a non-constant, non-literal node function
implementation realize_node(const sop& f, const gate_library& lib,
                            const cost_table& costs);

/// replace a gate by its dual wherever only its complement is consumed
mapped_network absorb_inverted_fanins(mapped_network m);

/// merge structurally identical gates, drop unreferenced ones
mapped_network redundancy_check(mapped_network m);

/// map a swept, decomposed network (<= 3 fanins per node) onto the library
mapped_network map_network(const network& net,
                           const gate_library& lib = gate_library::standard(),
                           const cost_table& costs = cost_table::crosstalk_defaults());

/// strawman bound: per-node Shannon NAND/NOR/INV trees, one explicit
/// inverter per complemented pin use, no absorption or merging
mapped_network naive_map(const network& net,
                         const cost_table& costs = cost_table::crosstalk_defaults());

} // namespace xtalk
