#include "xtalk/network.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace xtalk {

uint32_t network::add_input(const std::string& name) {
  inputs.push_back(name);
  return static_cast<uint32_t>(inputs.size() - 1);
}

uint32_t network::add_node(const std::string& name, std::vector<sig> fanins,
                           sop f) {
  nodes.push_back(node{name, std::move(fanins), std::move(f)});
  return static_cast<uint32_t>(nodes.size() - 1);
}

void network::add_output(const std::string& name, sig driver,
                         bool complemented) {
  outputs.push_back(output{name, driver, complemented});
}

std::optional<sig> network::find(const std::string& name) const {
  for (uint32_t i = 0; i < inputs.size(); ++i)
    if (inputs[i] == name)
      return sig::input(i);
  for (uint32_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].name == name)
      return sig::node(i);
  return std::nullopt;
}

const std::string& network::name_of(sig s) const {
  return s.is_input() ? inputs.at(s.index) : nodes.at(s.index).name;
}

std::optional<uint32_t> network::output_index(const std::string& name) const {
  for (uint32_t i = 0; i < outputs.size(); ++i)
    if (outputs[i].name == name)
      return i;
  return std::nullopt;
}

void network::validate() const {
  std::set<std::string> seen(inputs.begin(), inputs.end());
  if (seen.size() != inputs.size())
    throw error("network: duplicate input name");
  for (uint32_t i = 0; i < nodes.size(); ++i) {
    const node& n = nodes[i];
    if (!seen.insert(n.name).second)
      throw error("network: duplicate signal name '" + n.name + "'");
    std::set<sig> fs;
    for (sig s : n.fanins) {
      if (!fs.insert(s).second)
        throw error("network: duplicate fanin in node '" + n.name + "'");
      if (s.is_input()) {
        if (s.index >= inputs.size())
          throw error("network: fanin out of range");
      } else if (s.index >= i) {
        throw error("network: node '" + n.name + "' not in topological order");
      }
    }
    uint64_t sup = n.func.support();
    if (n.fanins.size() < 64 && (sup >> n.fanins.size()) != 0)
      throw error("network: function of '" + n.name +
                  "' references a missing fanin slot");
  }
  for (const output& o : outputs) {
    uint32_t lim = o.driver.is_input() ? inputs.size() : nodes.size();
    if (o.driver.index >= lim)
      throw error("network: unresolved output '" + o.name + "'");
  }
}

bool operator==(const network& a, const network& b) {
  if (a.inputs != b.inputs || a.outputs.size() != b.outputs.size() ||
      a.nodes.size() != b.nodes.size())
    return false;
  for (size_t i = 0; i < a.outputs.size(); ++i)
    if (!(a.outputs[i] == b.outputs[i]))
      return false;
  for (size_t i = 0; i < a.nodes.size(); ++i) {
    const node &x = a.nodes[i], &y = b.nodes[i];
    if (x.name != y.name || x.fanins != y.fanins || !(x.func == y.func))
      return false;
  }
  return true;
}

namespace {

// word-parallel block simulator: 64 assignments per word
class block_simulator {
public:
  explicit block_simulator(const network& net) : net_(net) {
    node_words_.resize(net.nodes.size());
  }

  // compute all node values for words [word_base, word_base + count)
  void run(uint64_t word_base, size_t count) {
    word_base_ = word_base;
    count_ = count;
    for (auto& v : node_words_)
      v.assign(count, 0);
    scratch_.assign(count, 0);
    for (size_t ni = 0; ni < net_.nodes.size(); ++ni) {
      const node& n = net_.nodes[ni];
      auto& out = node_words_[ni];
      if (n.func.is_const1()) {
        std::fill(out.begin(), out.end(), ~uint64_t{0});
        continue;
      }
      for (const cube& c : n.func.cubes) {
        auto& acc = scratch_;
        std::fill(acc.begin(), acc.end(), ~uint64_t{0});
        for (literal l : c.literals()) {
          sig s = n.fanins[l.var];
          for (size_t w = 0; w < count; ++w) {
            uint64_t v = value_word(s, w);
            acc[w] &= l.complemented ? ~v : v;
          }
        }
        for (size_t w = 0; w < count; ++w)
          out[w] |= acc[w];
      }
    }
  }

  uint64_t value_word(sig s, size_t w) const {
    if (!s.is_input())
      return node_words_[s.index][w];
    uint32_t k = s.index;
    if (k >= 6)
      return (((word_base_ + w) >> (k - 6)) & 1) ? ~uint64_t{0} : 0;
    static constexpr uint64_t pattern[6] = {
        0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
        0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};
    return pattern[k];
  }

  uint64_t output_word(const output& o, size_t w) const {
    uint64_t v = value_word(o.driver, w);
    return o.complemented ? ~v : v;
  }

private:
  const network& net_;
  uint64_t word_base_ = 0;
  size_t count_ = 0;
  std::vector<std::vector<uint64_t>> node_words_;
  std::vector<uint64_t> scratch_;
};

constexpr size_t kBlockWords = 1024; // 64 Ki assignments per block

uint64_t total_words(const network& net) {
  unsigned nv = static_cast<unsigned>(net.inputs.size());
  return nv <= 6 ? 1 : (uint64_t{1} << (nv - 6));
}

uint64_t last_word_mask(const network& net) {
  unsigned nv = static_cast<unsigned>(net.inputs.size());
  return nv >= 6 ? ~uint64_t{0} : (uint64_t{1} << (uint64_t{1} << nv)) - 1;
}

void check_oracle_width(const network& net) {
  if (net.inputs.size() > kMaxOracleInputs)
    throw error("input count exceeded: exhaustive oracle is limited to " +
                std::to_string(kMaxOracleInputs) + " inputs");
}

} // namespace

truth_table compute_truth_table(const network& net, const std::string& out_name) {
  check_oracle_width(net);
  auto oi = net.output_index(out_name);
  if (!oi)
    throw error("no output named '" + out_name + "'");
  truth_table tt;
  tt.num_vars = static_cast<uint32_t>(net.inputs.size());
  uint64_t words = total_words(net);
  tt.words.resize(words);
  block_simulator sim(net);
  for (uint64_t base = 0; base < words; base += kBlockWords) {
    size_t count = static_cast<size_t>(std::min<uint64_t>(kBlockWords, words - base));
    sim.run(base, count);
    for (size_t w = 0; w < count; ++w)
      tt.words[base + w] = sim.output_word(net.outputs[*oi], w);
  }
  tt.words.back() &= last_word_mask(net);
  return tt;
}

std::vector<bool> evaluate(const network& net, uint64_t assignment) {
  std::vector<bool> node_vals(net.nodes.size());
  auto value = [&](sig s) {
    return s.is_input() ? ((assignment >> s.index) & 1) != 0
                        : node_vals[s.index];
  };
  for (size_t i = 0; i < net.nodes.size(); ++i) {
    const node& n = net.nodes[i];
    uint64_t local = 0;
    for (size_t k = 0; k < n.fanins.size(); ++k)
      if (value(n.fanins[k]))
        local |= uint64_t{1} << k;
    node_vals[i] = n.func.eval(local);
  }
  std::vector<bool> out;
  out.reserve(net.outputs.size());
  for (const output& o : net.outputs)
    out.push_back(value(o.driver) != o.complemented);
  return out;
}

equiv_result is_equivalent(const network& a, const network& b) {
  if (a.inputs != b.inputs)
    throw error("interface mismatch: primary input lists differ");
  if (a.outputs.size() != b.outputs.size())
    throw error("interface mismatch: output counts differ");
  for (size_t i = 0; i < a.outputs.size(); ++i)
    if (a.outputs[i].name != b.outputs[i].name)
      throw error("interface mismatch: output names differ");
  check_oracle_width(a);

  uint64_t words = total_words(a);
  uint64_t tail_mask = last_word_mask(a);
  block_simulator sa(a), sb(b);
  for (uint64_t base = 0; base < words; base += kBlockWords) {
    size_t count = static_cast<size_t>(std::min<uint64_t>(kBlockWords, words - base));
    sa.run(base, count);
    sb.run(base, count);
    std::optional<counterexample> best;
    for (size_t oi = 0; oi < a.outputs.size(); ++oi) {
      for (size_t w = 0; w < count; ++w) {
        uint64_t va = sa.output_word(a.outputs[oi], w);
        uint64_t vb = sb.output_word(b.outputs[oi], w);
        uint64_t diff = va ^ vb;
        if (base + w == words - 1)
          diff &= tail_mask;
        if (!diff)
          continue;
        uint64_t idx = ((base + w) << 6) + std::countr_zero(diff);
        if (!best || idx < best->index) {
          counterexample cex;
          cex.index = idx;
          cex.output = a.outputs[oi].name;
          cex.value1 = (va >> (idx & 63)) & 1;
          cex.value2 = (vb >> (idx & 63)) & 1;
          for (uint32_t k = 0; k < a.inputs.size(); ++k)
            cex.assignment.emplace_back(a.inputs[k], ((idx >> k) & 1) != 0);
          best = cex;
        }
        break; // only the first differing word per output can hold the minimum
      }
    }
    if (best)
      return {false, best};
  }
  return {true, std::nullopt};
}

network reorder_inputs(const network& net, const std::vector<std::string>& order) {
  if (order.size() != net.inputs.size())
    throw error("reorder_inputs: input sets differ");
  std::vector<uint32_t> old_to_new(net.inputs.size());
  std::vector<bool> used(net.inputs.size(), false);
  for (uint32_t newi = 0; newi < order.size(); ++newi) {
    auto it = std::find(net.inputs.begin(), net.inputs.end(), order[newi]);
    if (it == net.inputs.end())
      throw error("reorder_inputs: unknown input '" + order[newi] + "'");
    uint32_t oldi = static_cast<uint32_t>(it - net.inputs.begin());
    if (used[oldi])
      throw error("reorder_inputs: duplicate input '" + order[newi] + "'");
    used[oldi] = true;
    old_to_new[oldi] = newi;
  }
  network out = net;
  out.inputs = order;
  for (node& n : out.nodes)
    for (sig& s : n.fanins)
      if (s.is_input())
        s.index = old_to_new[s.index];
  for (output& o : out.outputs)
    if (o.driver.is_input())
      o.driver.index = old_to_new[o.driver.index];
  return out;
}

network reorder_outputs(const network& net, const std::vector<std::string>& order) {
  if (order.size() != net.outputs.size())
    throw error("reorder_outputs: output sets differ");
  network out = net;
  out.outputs.clear();
  for (const std::string& name : order) {
    auto oi = net.output_index(name);
    if (!oi)
      throw error("reorder_outputs: unknown output '" + name + "'");
    out.outputs.push_back(net.outputs[*oi]);
  }
  if (out.outputs.size() != net.outputs.size())
    throw error("reorder_outputs: output sets differ");
  return out;
}

} // namespace xtalk
