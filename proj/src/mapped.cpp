#include "xtalk/mapped.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace xtalk {

std::string mapped_network::signal_name(msig s) const {
  switch (s.k) {
  case msig::kind::input:
    return inputs.at(s.index);
  case msig::kind::gate:
    return gates.at(s.index).id;
  case msig::kind::constant:
    return s.index ? "$const1" : "$const0";
  }
  throw error("signal_name: bad signal");
}

const mgate* mapped_network::find_gate(const std::string& id) const {
  for (const mgate& g : gates)
    if (g.id == id)
      return &g;
  return nullptr;
}

void mapped_network::rebuild_inverters(bool shared) {
  inverters.clear();
  std::set<std::string> taken;
  for (const auto& in : inputs)
    taken.insert(in);
  for (const auto& g : gates)
    taken.insert(g.id);
  auto fresh = [&](const std::string& base) {
    std::string id = base;
    int n = 1;
    while (!taken.insert(id).second)
      id = base + "_" + std::to_string(n++);
    return id;
  };
  std::set<msig> seen;
  auto note = [&](const mlit& l) {
    if (!l.complemented || l.src.is_const())
      return;
    if (shared && !seen.insert(l.src).second)
      return;
    inverters.push_back({fresh("inv_" + signal_name(l.src)), l.src});
  };
  for (const mgate& g : gates)
    for (const mlit& p : g.pins)
      note(p);
  for (const moutput& o : outputs)
    note(o.driver);
}

void mapped_network::validate() const {
  std::set<std::string> names(inputs.begin(), inputs.end());
  auto check = [&](const mlit& l, uint32_t gate_limit) {
    switch (l.src.k) {
    case msig::kind::input:
      if (l.src.index >= inputs.size())
        throw error("mapped: input reference out of range");
      break;
    case msig::kind::gate:
      if (l.src.index >= gate_limit)
        throw error("mapped: gate reference out of order");
      break;
    case msig::kind::constant:
      if (l.src.index > 1)
        throw error("mapped: bad constant");
      break;
    }
  };
  for (uint32_t i = 0; i < gates.size(); ++i) {
    const mgate& g = gates[i];
    if (!names.insert(g.id).second)
      throw error("mapped: duplicate id '" + g.id + "'");
    if (g.kind == gate_kind::inv)
      throw error("mapped: INV must be an inverter record, not a gate");
    if (g.pins.size() != info(g.kind).arity)
      throw error("mapped: arity mismatch on '" + g.id + "'");
    for (const mlit& p : g.pins)
      check(p, i);
  }
  for (const minverter& v : inverters) {
    if (!names.insert(v.id).second)
      throw error("mapped: duplicate id '" + v.id + "'");
    check({v.src, false}, static_cast<uint32_t>(gates.size()));
  }
  for (const moutput& o : outputs)
    check(o.driver, static_cast<uint32_t>(gates.size()));
}

network to_network(const mapped_network& m) {
  network net;
  for (const auto& in : m.inputs)
    net.add_input(in);
  std::vector<sig> gate_sig(m.gates.size());
  uint32_t const_idx[2] = {UINT32_MAX, UINT32_MAX};
  auto const_sig = [&](bool v) {
    if (const_idx[v] == UINT32_MAX)
      const_idx[v] = net.add_node(v ? "$const1" : "$const0", {},
                                  sop::constant(v));
    return sig::node(const_idx[v]);
  };
  auto to_sig = [&](msig s) {
    switch (s.k) {
    case msig::kind::input:
      return sig::input(s.index);
    case msig::kind::gate:
      return gate_sig[s.index];
    default:
      return const_sig(s.index != 0);
    }
  };
  for (uint32_t gi = 0; gi < m.gates.size(); ++gi) {
    const mgate& g = m.gates[gi];
    // pin complements fold into the local function
    std::vector<sig> fanins;
    std::vector<uint32_t> slot_of_pin;
    std::vector<bool> flip;
    for (const mlit& p : g.pins) {
      sig s = to_sig(p.src);
      auto it = std::find(fanins.begin(), fanins.end(), s);
      uint32_t slot;
      if (it == fanins.end()) {
        slot = static_cast<uint32_t>(fanins.size());
        fanins.push_back(s);
      } else {
        slot = static_cast<uint32_t>(it - fanins.begin());
      }
      slot_of_pin.push_back(slot);
      flip.push_back(p.complemented);
    }
    sop f;
    for (const cube& c : kind_sop(g.kind).cubes) {
      cube nc;
      bool dead = false;
      for (literal l : c.literals()) {
        literal nl{slot_of_pin[l.var],
                   l.complemented != flip[l.var]};
        if (nc.has(~nl)) {
          dead = true;
          break;
        }
        nc = nc.with(nl);
      }
      if (!dead)
        f.cubes.push_back(nc);
    }
    f.normalize();
    gate_sig[gi] = sig::node(net.add_node(g.id, std::move(fanins), std::move(f)));
  }
  for (const moutput& o : m.outputs)
    net.add_output(o.name, to_sig(o.driver.src), o.driver.complemented);
  return net;
}

// ---------------------------------------------------------------- expression

std::string emit_expression(const mapped_network& m) {
  std::vector<int> refs(m.gates.size(), 0);
  auto note = [&](const mlit& l) {
    if (l.src.is_gate())
      ++refs[l.src.index];
  };
  for (const mgate& g : m.gates)
    for (const mlit& p : g.pins)
      note(p);
  for (const moutput& o : m.outputs)
    note(o.driver);

  std::vector<bool> named(m.gates.size(), false);
  std::vector<std::string> out_of_gate(m.gates.size());
  for (const moutput& o : m.outputs)
    if (o.driver.src.is_gate() && !o.driver.complemented &&
        out_of_gate[o.driver.src.index].empty())
      out_of_gate[o.driver.src.index] = o.name;
  for (uint32_t gi = 0; gi < m.gates.size(); ++gi)
    named[gi] = refs[gi] != 1 || !out_of_gate[gi].empty();

  auto gate_label = [&](uint32_t gi) {
    return out_of_gate[gi].empty() ? m.gates[gi].id : out_of_gate[gi];
  };

  std::function<std::string(const mlit&)> render = [&](const mlit& l) {
    std::string s;
    if (l.src.is_gate() && !named[l.src.index]) {
      const mgate& g = m.gates[l.src.index];
      s = std::string(info(g.kind).render) + "(";
      for (size_t j = 0; j < g.pins.size(); ++j) {
        if (j)
          s += ",";
        s += render(g.pins[j]);
      }
      s += ")";
    } else if (l.src.is_gate()) {
      s = gate_label(l.src.index);
    } else if (l.src.is_const()) {
      s = l.src.index ? "1" : "0";
    } else {
      s = m.inputs[l.src.index];
    }
    if (l.complemented)
      s += "'";
    return s;
  };

  std::ostringstream os;
  for (uint32_t gi = 0; gi < m.gates.size(); ++gi) {
    if (!named[gi] || refs[gi] == 0)
      continue;
    const mgate& g = m.gates[gi];
    os << gate_label(gi) << " = " << info(g.kind).render << "(";
    for (size_t j = 0; j < g.pins.size(); ++j) {
      if (j)
        os << ",";
      os << render(g.pins[j]);
    }
    os << ")\n";
  }
  std::set<std::string> already;
  for (uint32_t gi = 0; gi < m.gates.size(); ++gi)
    if (named[gi] && refs[gi] != 0 && !out_of_gate[gi].empty())
      already.insert(out_of_gate[gi]);
  for (const moutput& o : m.outputs) {
    if (already.count(o.name))
      continue;
    os << o.name << " = " << render(o.driver) << "\n";
  }
  return os.str();
}

// ------------------------------------------------------------- serialization

namespace {

using ojson = nlohmann::ordered_json;

std::string json_emit(const mapped_network& m) {
  ojson j;
  j["inputs"] = m.inputs;
  j["outputs"] = ojson::array();
  for (const moutput& o : m.outputs)
    j["outputs"].push_back({{"name", o.name},
                            {"driver", m.signal_name(o.driver.src)},
                            {"complemented", o.driver.complemented}});
  j["gates"] = ojson::array();
  for (const mgate& g : m.gates) {
    ojson pins = ojson::array();
    for (const mlit& p : g.pins)
      pins.push_back({{"name", m.signal_name(p.src)},
                      {"complemented", p.complemented}});
    j["gates"].push_back(
        {{"id", g.id}, {"kind", info(g.kind).name}, {"inputs", pins}});
  }
  j["inverters"] = ojson::array();
  for (const minverter& v : m.inverters)
    j["inverters"].push_back({{"id", v.id}, {"input", m.signal_name(v.src)}});
  return j.dump(2) + "\n";
}

class name_resolver {
public:
  explicit name_resolver(const mapped_network& m) {
    for (uint32_t i = 0; i < m.inputs.size(); ++i)
      map_[m.inputs[i]] = msig::input(i);
  }
  void add_gate(const std::string& id, uint32_t index) {
    if (!map_.emplace(id, msig::gate(index)).second)
      throw error("netlist: duplicate id '" + id + "'");
  }
  msig resolve(const std::string& name) const {
    if (name == "$const0")
      return msig::constant(false);
    if (name == "$const1")
      return msig::constant(true);
    auto it = map_.find(name);
    if (it == map_.end())
      throw error("netlist: undefined signal '" + name + "'");
    return it->second;
  }

private:
  std::map<std::string, msig> map_;
};

mapped_network json_load(const std::string& text) {
  ojson j = ojson::parse(text);
  mapped_network m;
  for (const auto& in : j.at("inputs"))
    m.inputs.push_back(in.get<std::string>());
  name_resolver names(m);
  uint32_t gi = 0;
  for (const auto& g : j.at("gates"))
    names.add_gate(g.at("id").get<std::string>(), gi++);
  for (const auto& g : j.at("gates")) {
    mgate mg;
    mg.id = g.at("id").get<std::string>();
    auto k = kind_by_name(g.at("kind").get<std::string>());
    if (!k)
      throw error("netlist: unknown gate kind '" +
                  g.at("kind").get<std::string>() + "'");
    mg.kind = *k;
    for (const auto& p : g.at("inputs"))
      mg.pins.push_back({names.resolve(p.at("name").get<std::string>()),
                         p.at("complemented").get<bool>()});
    m.gates.push_back(std::move(mg));
  }
  for (const auto& v : j.at("inverters"))
    m.inverters.push_back({v.at("id").get<std::string>(),
                           names.resolve(v.at("input").get<std::string>())});
  for (const auto& o : j.at("outputs"))
    m.outputs.push_back({o.at("name").get<std::string>(),
                         {names.resolve(o.at("driver").get<std::string>()),
                          o.at("complemented").get<bool>()}});
  m.validate();
  return m;
}

std::string lit_text(const mapped_network& m, const mlit& l) {
  return m.signal_name(l.src) + (l.complemented ? "'" : "");
}

std::string blif_emit(const mapped_network& m) {
  std::ostringstream os;
  os << ".model mapped\n.inputs";
  for (const auto& in : m.inputs)
    os << " " << in;
  os << "\n.outputs";
  for (const auto& o : m.outputs)
    os << " " << o.name;
  os << "\n";
  for (const mgate& g : m.gates) {
    os << ".gate " << info(g.kind).name << " " << g.id;
    for (const mlit& p : g.pins)
      os << " " << lit_text(m, p);
    os << "\n";
  }
  for (const minverter& v : m.inverters)
    os << ".inv " << v.id << " " << m.signal_name(v.src) << "\n";
  for (const moutput& o : m.outputs)
    os << ".conn " << o.name << " " << lit_text(m, o.driver) << "\n";
  os << ".end\n";
  return os.str();
}

mapped_network blif_load(const std::string& text) {
  mapped_network m;
  std::istringstream is(text);
  std::string line;
  struct pending_gate {
    std::string kind, id;
    std::vector<std::string> pins;
  };
  std::vector<pending_gate> gates;
  std::vector<std::pair<std::string, std::string>> invs, conns;
  std::vector<std::string> output_names;
  while (std::getline(is, line)) {
    if (auto h = line.find('#'); h != std::string::npos)
      line.resize(h);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok))
      continue;
    std::vector<std::string> rest;
    for (std::string t; ls >> t;)
      rest.push_back(t);
    if (tok == ".model" || tok == ".end")
      continue;
    if (tok == ".inputs")
      m.inputs.insert(m.inputs.end(), rest.begin(), rest.end());
    else if (tok == ".outputs")
      output_names.insert(output_names.end(), rest.begin(), rest.end());
    else if (tok == ".gate") {
      if (rest.size() < 2)
        throw error("netlist: malformed .gate line");
      pending_gate g{rest[0], rest[1], {rest.begin() + 2, rest.end()}};
      gates.push_back(std::move(g));
    } else if (tok == ".inv") {
      if (rest.size() != 2)
        throw error("netlist: malformed .inv line");
      invs.emplace_back(rest[0], rest[1]);
    } else if (tok == ".conn") {
      if (rest.size() != 2)
        throw error("netlist: malformed .conn line");
      conns.emplace_back(rest[0], rest[1]);
    } else {
      throw error("netlist: unsupported directive '" + tok + "'");
    }
  }
  name_resolver names(m);
  for (uint32_t i = 0; i < gates.size(); ++i)
    names.add_gate(gates[i].id, i);
  auto parse_lit = [&](std::string s) {
    mlit l;
    if (!s.empty() && s.back() == '\'') {
      l.complemented = true;
      s.pop_back();
    }
    l.src = names.resolve(s);
    return l;
  };
  for (const auto& pg : gates) {
    auto k = kind_by_name(pg.kind);
    if (!k)
      throw error("netlist: unknown gate kind '" + pg.kind + "'");
    mgate g;
    g.id = pg.id;
    g.kind = *k;
    for (const auto& p : pg.pins)
      g.pins.push_back(parse_lit(p));
    m.gates.push_back(std::move(g));
  }
  for (const auto& [id, src] : invs)
    m.inverters.push_back({id, names.resolve(src)});
  std::map<std::string, mlit> conn_of;
  for (const auto& [name, l] : conns)
    conn_of[name] = parse_lit(l);
  for (const auto& name : output_names) {
    auto it = conn_of.find(name);
    if (it == conn_of.end())
      throw error("netlist: output '" + name + "' has no .conn line");
    m.outputs.push_back({name, it->second});
  }
  m.validate();
  return m;
}

} // namespace

std::string emit_netlist(const mapped_network& m, netlist_format fmt) {
  return fmt == netlist_format::json ? json_emit(m) : blif_emit(m);
}

mapped_network load_netlist(const std::string& text, netlist_format fmt) {
  return fmt == netlist_format::json ? json_load(text) : blif_load(text);
}

} // namespace xtalk
