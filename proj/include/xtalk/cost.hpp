#pragma once

/*!
  \file cost.hpp
  \brief Transistor/gate counting, CMOS baseline covering, reduction reports.

  The density metric is Count = T + 2*I: gate-core transistors plus two per
  explicit inverter. Gate counts exclude standalone inverters; the inverter
  total is reported separately.
*/

#include "xtalk/gates.hpp"
#include "xtalk/mapped.hpp"
#include "xtalk/network.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace xtalk {

struct cost_table {
  std::array<int, kGateKindCount> core{}; ///< per-kind core transistors
  int inverter_cost = 2;

  int of(gate_kind k) const;

  /// inverting cores 3, non-inverting 5, inverter 2
  static cost_table crosstalk_defaults();
  /// 2 transistors per input for NAND/NOR/AOI/OAI, +2 for AND/OR, INV = 2
  static cost_table cmos_defaults();
};

/// apply "KIND = integer" override lines to a table; the CT_ prefix is
/// optional; INV sets the inverter cost; unknown kinds are rejected
cost_table parse_cost_table(const std::string& text, cost_table base);

int transistor_count(const mapped_network& m, const cost_table& costs);
int gate_count(const mapped_network& m);

struct per_output_cost {
  std::string name;
  int transistors = 0;
  int gates = 0;
};

struct cost_report {
  std::string label;
  int transistors = 0;
  int gates = 0;
  int inverters = 0;
  std::vector<per_output_cost> per_output; ///< cone recount, sharing included
};

cost_report report_cost(const mapped_network& m, const cost_table& costs,
                        const std::string& label);

/// percentage reduction, rounded to nearest with halves away from zero;
/// errors when base is zero
int reduction_pct(int base, int ours);

struct reduction_row {
  std::string name;
  std::string io; ///< "in/out"
  int base_transistors = 0, base_gates = 0;
  int ours_transistors = 0, ours_gates = 0;
  int r_transistor_pct = 0, r_gate_pct = 0;
};

reduction_row make_reduction(const std::string& name, const std::string& io,
                             int base_t, int base_g, const cost_report& ours);

/// greedy per-node covering with CMOS cells (NAND/NOR/AOI/OAI preferred,
/// then AND/OR, complement+INV considered; Shannon NAND-tree fallback)
cost_report cmos_baseline(const network& net, const cost_table& cmos);

/// externally supplied reference counts ("name.cmos_transistors = 18" lines)
struct ref_entry {
  std::optional<int> cmos_transistors, cmos_gates;
  std::optional<int> existing_transistors, existing_gates;
};

std::map<std::string, ref_entry> parse_refs(const std::string& text);

} // namespace xtalk
