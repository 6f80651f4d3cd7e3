#pragma once

/*!
  \file mapped.hpp
  \brief Crosstalk gate netlist: gates, explicit inverters, serialization.

  Complemented fanins are carried as flags on pin literals; the inverter list
  materializes one explicit inverter per distinct complemented source, so a
  complemented primary input costs a single shared inverter no matter how
  many pins consume it.
*/

#include "xtalk/gates.hpp"
#include "xtalk/network.hpp"

#include <string>
#include <vector>

namespace xtalk {

/*! \brief Source of a mapped literal. */
struct msig {
  enum class kind : uint8_t { input, gate, constant };
  kind k = kind::input;
  uint32_t index = 0; ///< input index, gate index, or constant value (0/1)

  static msig input(uint32_t i) { return {kind::input, i}; }
  static msig gate(uint32_t i) { return {kind::gate, i}; }
  static msig constant(bool v) { return {kind::constant, v ? 1u : 0u}; }
  bool is_gate() const { return k == kind::gate; }
  bool is_input() const { return k == kind::input; }
  bool is_const() const { return k == kind::constant; }
  friend auto operator<=>(const msig&, const msig&) = default;
};

struct mlit {
  msig src;
  bool complemented = false;
  friend auto operator<=>(const mlit&, const mlit&) = default;
};

struct mgate {
  std::string id;
  gate_kind kind;
  std::vector<mlit> pins;
  friend bool operator==(const mgate&, const mgate&) = default;
};

struct minverter {
  std::string id;
  msig src;
  friend bool operator==(const minverter&, const minverter&) = default;
};

struct moutput {
  std::string name;
  mlit driver;
  friend bool operator==(const moutput&, const moutput&) = default;
};

struct mapped_network {
  std::vector<std::string> inputs;
  std::vector<mgate> gates; ///< topologically ordered
  std::vector<minverter> inverters;
  std::vector<moutput> outputs;

  std::string signal_name(msig s) const;
  const mgate* find_gate(const std::string& id) const;

  /// rebuild the inverter list: one record per distinct complemented source
  /// referenced by any pin or output (per-use records when shared is false)
  void rebuild_inverters(bool shared = true);

  void validate() const;

  friend bool operator==(const mapped_network&, const mapped_network&) = default;
};

/// view the gate netlist as a Boolean network (for the equivalence oracle)
network to_network(const mapped_network& m);

/// deterministic nested-functional rendering; single-use gates are inlined,
/// shared gates get their own definition line
std::string emit_expression(const mapped_network& m);

enum class netlist_format { json, blif_like };

std::string emit_netlist(const mapped_network& m, netlist_format fmt);
mapped_network load_netlist(const std::string& text, netlist_format fmt);

} // namespace xtalk
