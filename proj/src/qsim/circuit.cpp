#include "eqshadow/qsim/circuit.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace eqshadow {

std::string gate_name(GateKind k) {
  switch (k) {
    case GateKind::H: return "H";
    case GateKind::S: return "S";
    case GateKind::Sdg: return "SDG";
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::CZ: return "CZ";
    case GateKind::CNOT: return "CNOT";
  }
  return "?";
}

namespace {

GateKind parse_gate(const std::string& s) {
  if (s == "H") return GateKind::H;
  if (s == "S") return GateKind::S;
  if (s == "SDG" || s == "S_DAG") return GateKind::Sdg;
  if (s == "X") return GateKind::X;
  if (s == "Y") return GateKind::Y;
  if (s == "Z") return GateKind::Z;
  if (s == "CZ") return GateKind::CZ;
  if (s == "CNOT" || s == "CX") return GateKind::CNOT;
  throw std::invalid_argument("unknown gate: " + s);
}

char basis_char(Basis b) {
  switch (b) {
    case Basis::X: return 'X';
    case Basis::Y: return 'Y';
    case Basis::Z: return 'Z';
    default: return '-';
  }
}

}  // namespace

Circuit::Circuit(int n) : n_(n), meas_(static_cast<std::size_t>(n), Basis::None) {
  require_qubits(n);
}

void Circuit::add_layer(Layer layer) {
  Bits used = 0;
  for (const auto& g : layer) {
    const bool two = g.two_qubit();
    if (g.q0 < 0 || g.q0 >= n_ || (two && (g.q1 < 0 || g.q1 >= n_)))
      throw std::invalid_argument("gate index out of range");
    if (two && g.q0 == g.q1) throw std::invalid_argument("two-qubit gate on one qubit");
    Bits support = Bits{1} << g.q0;
    if (two) support |= Bits{1} << g.q1;
    if (used & support) throw std::invalid_argument("overlapping supports within a layer");
    used |= support;
  }
  layers_.push_back(std::move(layer));
}

void Circuit::append(const Circuit& other) {
  if (other.n_ != n_) throw std::invalid_argument("append: qubit count mismatch");
  for (const auto& l : other.layers_) layers_.push_back(l);
}

void Circuit::set_measurement(int q, Basis b) { meas_.at(static_cast<std::size_t>(q)) = b; }

void Circuit::measure_all(Basis b) { std::fill(meas_.begin(), meas_.end(), b); }

bool Circuit::has_measurement() const {
  return std::any_of(meas_.begin(), meas_.end(), [](Basis b) { return b != Basis::None; });
}

Circuit Circuit::inverse() const {
  Circuit c(n_);
  for (auto it = layers_.rbegin(); it != layers_.rend(); ++it) {
    Layer l = *it;
    for (auto& g : l) {
      if (g.kind == GateKind::S) g.kind = GateKind::Sdg;
      else if (g.kind == GateKind::Sdg) g.kind = GateKind::S;
    }
    c.layers_.push_back(std::move(l));
  }
  return c;
}

std::string Circuit::to_text() const {
  std::ostringstream os;
  os << "QUBITS " << n_ << '\n';
  for (std::size_t i = 0; i < layers_.size(); ++i) {
    if (i) os << "---\n";
    for (const auto& g : layers_[i]) {
      os << gate_name(g.kind) << ' ' << g.q0;
      if (g.two_qubit()) os << ' ' << g.q1;
      os << '\n';
    }
  }
  bool sep = !layers_.empty();
  for (int q = 0; q < n_; ++q) {
    if (meas_[static_cast<std::size_t>(q)] == Basis::None) continue;
    if (sep) {
      os << "---\n";
      sep = false;
    }
    os << "MEAS " << basis_char(meas_[static_cast<std::size_t>(q)]) << ' ' << q << '\n';
  }
  for (int q = 0; q < n_; ++q)
    if (bit(flips_, q)) os << "FLIP " << q << '\n';
  if (reverse_) os << "REVERSE\n";
  return os.str();
}

Circuit Circuit::parse(std::string_view text) {
  struct Line {
    std::vector<std::string> tok;
  };
  std::vector<std::vector<Line>> blocks(1);
  int declared = -1, max_index = -1;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    Line line;
    for (std::string t; ls >> t;) line.tok.push_back(t);
    if (line.tok.empty()) continue;
    if (line.tok[0] == "---") {
      blocks.emplace_back();
      continue;
    }
    if (line.tok[0] == "QUBITS") {
      declared = std::stoi(line.tok.at(1));
      continue;
    }
    for (std::size_t k = 1; k < line.tok.size(); ++k) {
      if (line.tok[0] == "MEAS" && k == 1) continue;
      max_index = std::max(max_index, std::stoi(line.tok[k]));
    }
    blocks.back().push_back(std::move(line));
  }
  const int n = declared > 0 ? declared : max_index + 1;
  if (max_index >= n) throw std::invalid_argument("qubit index exceeds declared count");
  Circuit c(n);
  for (const auto& block : blocks) {
    Layer layer;
    for (const auto& line : block) {
      const auto& t = line.tok;
      if (t[0] == "MEAS") {
        if (t.size() != 3) throw std::invalid_argument("MEAS needs a basis and a qubit");
        const Basis b = t[1] == "X" ? Basis::X : t[1] == "Y" ? Basis::Y : t[1] == "Z" ? Basis::Z
                                                                              : throw std::invalid_argument("bad basis");
        c.set_measurement(std::stoi(t[2]), b);
      } else if (t[0] == "FLIP") {
        c.flips_ |= Bits{1} << std::stoi(t.at(1));
      } else if (t[0] == "REVERSE") {
        c.reverse_ = true;
      } else {
        Gate g{parse_gate(t[0]), std::stoi(t.at(1)), -1};
        if (g.two_qubit()) g.q1 = std::stoi(t.at(2));
        if (t.size() != (g.two_qubit() ? 3u : 2u)) throw std::invalid_argument("wrong operand count");
        layer.push_back(g);
      }
    }
    if (!layer.empty()) c.add_layer(std::move(layer));
  }
  return c;
}

}  // namespace eqshadow
