#pragma once

/*!
  \file gates.hpp
  \brief Crosstalk gate kinds: truth tables, dual pairing, pin matching.

  The library S holds the non-inverting homogeneous and heterogeneous kinds;
  S' holds their output-complement duals. Pin 0 is the least-significant
  truth-table bit.
*/

#include "xtalk/sop.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace xtalk {

enum class gate_kind : uint8_t {
  inv,
  nand2,
  nand3,
  nor2,
  nor3,
  and2,
  and3,
  or2,
  or3,
  maj3,
  min3,
  ao21,
  oa21,
  aoi21,
  oai21,
  sum4,
  sumi4,
};

constexpr size_t kGateKindCount = 17;

struct kind_info {
  gate_kind kind;
  const char* name;   ///< config/netlist spelling, e.g. "CT_NAND2"
  const char* render; ///< expression spelling, e.g. "X_nand"
  uint8_t arity;
  uint16_t tt;        ///< truth table over `arity` pins, pin 0 = LSB
  bool inverting;     ///< member of S' (complemented-output family)
  gate_kind dual;
};

const kind_info& info(gate_kind k);
std::span<const kind_info> all_kinds();
std::optional<gate_kind> kind_by_name(const std::string& name);

/// the gate function as a canonical sum-of-products over pin slots
const sop& kind_sop(gate_kind k);

/*! \brief Gate set with its dual involution. */
struct gate_library {
  std::vector<gate_kind> members;

  static const gate_library& standard(); ///< every kind except INV
  bool contains(gate_kind k) const;
  gate_kind dual(gate_kind k) const { return info(k).dual; }
};

/*! \brief One way of binding a function's slots onto a gate's pins. */
struct pin_binding {
  gate_kind kind;
  std::array<uint8_t, 4> slot_of_pin{}; ///< pin j reads slot slot_of_pin[j]
  uint8_t complement_mask = 0;          ///< bit j: pin j takes the complement
  int complemented_pins() const;
};

/// all bindings of `k` whose bound table equals `tt` over `num_vars` slots,
/// in deterministic order (permutation-major, then complement mask)
std::vector<pin_binding> match_kind(uint64_t tt, unsigned num_vars, gate_kind k);

/// truth table of a gate kind under a binding, over `num_vars` slots
uint64_t bound_truth_table(const pin_binding& b, unsigned num_vars);

} // namespace xtalk
