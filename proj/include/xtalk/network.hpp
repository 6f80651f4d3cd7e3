#pragma once

/*!
  \file network.hpp
  \brief Multi-level Boolean network, exhaustive simulation, equivalence oracle.

  A network is an acyclic list of nodes over named primary inputs. Each node
  holds a local sum-of-products over its fanin slots. Outputs are named
  literals over nodes or inputs.
*/

#include "xtalk/sop.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace xtalk {

/*! \brief Reference to a primary input or a node. */
struct sig {
  enum class kind : uint8_t { input, node };
  kind k = kind::input;
  uint32_t index = 0;

  static sig input(uint32_t i) { return {kind::input, i}; }
  static sig node(uint32_t i) { return {kind::node, i}; }
  bool is_input() const { return k == kind::input; }
  friend auto operator<=>(const sig&, const sig&) = default;
};

struct node {
  std::string name;
  std::vector<sig> fanins;
  sop func; ///< over fanin slots 0..fanins.size()-1
};

struct output {
  std::string name;
  sig driver;
  bool complemented = false;

  friend bool operator==(const output&, const output&) = default;
};

struct network {
  std::vector<std::string> inputs;
  std::vector<node> nodes; ///< topologically ordered
  std::vector<output> outputs;

  uint32_t add_input(const std::string& name);
  /// append a node; fanins must reference inputs or earlier nodes
  uint32_t add_node(const std::string& name, std::vector<sig> fanins, sop f);
  void add_output(const std::string& name, sig driver, bool complemented = false);

  std::optional<sig> find(const std::string& name) const;
  const std::string& name_of(sig s) const;
  std::optional<uint32_t> output_index(const std::string& name) const;

  /// throws on any structural invariant violation
  void validate() const;

  friend bool operator==(const network&, const network&);
};

/// structural equality helper for determinism/idempotence tests
bool operator==(const network& a, const network& b);

constexpr unsigned kMaxOracleInputs = 24;

/*! \brief Exhaustive truth table; input 0 is the least-significant index bit. */
struct truth_table {
  uint32_t num_vars = 0;
  std::vector<uint64_t> words;

  bool bit(uint64_t i) const { return (words[i >> 6] >> (i & 63)) & 1; }
  uint64_t num_rows() const { return uint64_t{1} << num_vars; }

  friend bool operator==(const truth_table&, const truth_table&) = default;
};

/// exhaustive evaluation of the cone feeding the named output;
/// error when the network has more than 24 inputs
truth_table compute_truth_table(const network& net, const std::string& out_name);

/// evaluate every output under one input assignment (bit k of `assignment`
/// is input k); independent single-assignment path used by tests as well
std::vector<bool> evaluate(const network& net, uint64_t assignment);

struct counterexample {
  uint64_t index = 0; ///< assignment index (input 0 = LSB)
  std::vector<std::pair<std::string, bool>> assignment;
  std::string output;   ///< first differing output at that assignment
  bool value1 = false, value2 = false;
};

struct equiv_result {
  bool equivalent = true;
  std::optional<counterexample> cex;
};

/// exhaustive comparison; networks must agree on ordered input and output
/// name lists (error otherwise); returns the lowest-index differing assignment
equiv_result is_equivalent(const network& a, const network& b);

/// relabel: permute the input list into the given order (names must match as
/// a set); used to align interfaces before comparison
network reorder_inputs(const network& net, const std::vector<std::string>& order);

/// reorder outputs by name into the given order (names must match as a set)
network reorder_outputs(const network& net, const std::vector<std::string>& order);

} // namespace xtalk
