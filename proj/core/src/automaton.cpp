#include "tesserae/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <unordered_map>

#include "tesserae/error.hpp"

namespace tesserae {

namespace {

// One placement of a variant anchored at a given row of the current column,
// expressed as a mask over the (width x (reach+1)) window.
struct Placement {
  std::uint64_t mask;
};

// Window bit layout: bit (row * span + col), span = reach + 1, col 0 being the
// column under construction.
class ColumnFiller {
 public:
  ColumnFiller(const TileSet& tiles, int width) : width_(width) {
    std::vector<const Polyomino*> fitting;
    for (const Polyomino& v : tiles.variants()) {
      if (v.height() <= width) fitting.push_back(&v);
    }
    if (fitting.empty()) {
      throw DomainError("no tile orientation fits in a strip of width " +
                        std::to_string(width));
    }
    for (const Polyomino* v : fitting) reach_ = std::max(reach_, v->width() - 1);
    span_ = reach_ + 1;
    if (width_ * span_ > 64) {
      throw DomainError("strip too wide: width * column reach exceeds 64 cells");
    }

    by_row_.resize(width_);
    for (const Polyomino* v : fitting) {
      const Cell anchor = v->scan_first();
      for (int row = 0; row < width_; ++row) {
        std::uint64_t mask = 0;
        bool fits = true;
        for (const Cell& c : v->cells()) {
          const int r = row + c.row - anchor.row;
          const int col = c.col - anchor.col;
          if (r < 0 || r >= width_) {
            fits = false;
            break;
          }
          mask |= bit(r, col);
        }
        if (fits) by_row_[row].push_back(Placement{mask});
      }
    }
  }

  int reach() const { return reach_; }

  // Counts the ways to complete column 0 from `profile`, keyed by the profile
  // left for the next column.
  std::map<Profile, std::uint64_t> transitions(Profile profile) const {
    std::map<Profile, std::uint64_t> out;
    fill(to_window(profile), 0, out);
    return out;
  }

 private:
  std::uint64_t bit(int row, int col) const {
    return std::uint64_t{1} << (row * span_ + col);
  }

  std::uint64_t to_window(Profile p) const {
    std::uint64_t w = 0;
    for (int r = 0; r < width_; ++r) {
      for (int c = 0; c < reach_; ++c) {
        if ((p >> (r * reach_ + c)) & 1U) w |= bit(r, c);
      }
    }
    return w;
  }

  Profile from_window(std::uint64_t w) const {
    Profile p = 0;
    for (int r = 0; r < width_; ++r) {
      for (int c = 0; c < reach_; ++c) {
        if (w & bit(r, c + 1)) p |= Profile{1} << (r * reach_ + c);
      }
    }
    return p;
  }

  void fill(std::uint64_t window, int row, std::map<Profile, std::uint64_t>& out) const {
    while (row < width_ && (window & bit(row, 0))) ++row;
    if (row == width_) {
      ++out[from_window(window)];
      return;
    }
    for (const Placement& p : by_row_[row]) {
      if ((window & p.mask) == 0) fill(window | p.mask, row + 1, out);
    }
  }

  int width_;
  int reach_ = 0;
  int span_ = 1;
  std::vector<std::vector<Placement>> by_row_;
};

}  // namespace

TransferAutomaton::TransferAutomaton(int width, int reach, std::vector<Profile> states,
                                     std::size_t start, std::vector<std::vector<Edge>> rows)
    : width_(width),
      reach_(reach),
      states_(std::move(states)),
      start_(start),
      rows_(std::move(rows)) {
  if (width_ < 1 || reach_ < 0) throw DomainError("invalid automaton dimensions");
  if (states_.empty() || start_ >= states_.size()) throw DomainError("invalid start state");
  if (rows_.size() != states_.size()) throw DomainError("row count differs from state count");
  for (const auto& row : rows_) {
    for (const Edge& e : row) {
      if (e.to >= states_.size()) throw DomainError("edge target out of range");
      if (e.weight < 0) throw DomainError("negative transition count");
    }
  }
}

BigInt TransferAutomaton::entry(std::size_t i, std::size_t j) const {
  BigInt total = 0;
  for (const Edge& e : rows_.at(i)) {
    if (e.to == j) total += e.weight;
  }
  return total;
}

bool TransferAutomaton::occupied(std::size_t state, int row, int col) const {
  return (states_.at(state) >> (row * reach_ + col)) & 1U;
}

TransferAutomaton build_automaton(const TileSet& tiles, int width) {
  if (width < 1) throw DomainError("strip width must be at least 1");
  const ColumnFiller filler(tiles, width);

  std::vector<Profile> states{0};
  std::unordered_map<Profile, std::size_t> index{{0, 0}};
  std::vector<std::vector<TransferAutomaton::Edge>> rows;
  for (std::size_t i = 0; i < states.size(); ++i) {
    std::vector<TransferAutomaton::Edge> row;
    for (const auto& [next, count] : filler.transitions(states[i])) {
      auto [it, inserted] = index.try_emplace(next, states.size());
      if (inserted) states.push_back(next);
      row.push_back({it->second, BigInt(static_cast<unsigned long>(count))});
    }
    rows.push_back(std::move(row));
  }
  return TransferAutomaton(width, filler.reach(), std::move(states), 0, std::move(rows));
}

TransferAutomaton trim_reachable(const TransferAutomaton& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<std::size_t>> forward(n), backward(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& e : a.row(i)) {
      if (e.weight == 0) continue;
      forward[i].push_back(e.to);
      backward[e.to].push_back(i);
    }
  }
  auto sweep = [&](const std::vector<std::vector<std::size_t>>& adj) {
    std::vector<bool> seen(n, false);
    std::deque<std::size_t> queue{a.start()};
    seen[a.start()] = true;
    while (!queue.empty()) {
      const std::size_t s = queue.front();
      queue.pop_front();
      for (std::size_t t : adj[s]) {
        if (!seen[t]) {
          seen[t] = true;
          queue.push_back(t);
        }
      }
    }
    return seen;
  };
  const auto reach = sweep(forward);
  const auto coreach = sweep(backward);

  std::vector<std::size_t> remap(n, n);
  std::vector<Profile> states;
  for (std::size_t i = 0; i < n; ++i) {
    if (reach[i] && coreach[i]) {
      remap[i] = states.size();
      states.push_back(a.states()[i]);
    }
  }
  std::vector<std::vector<TransferAutomaton::Edge>> rows(states.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (remap[i] == n) continue;
    for (const auto& e : a.row(i)) {
      if (remap[e.to] != n && e.weight != 0) rows[remap[i]].push_back({remap[e.to], e.weight});
    }
  }
  return TransferAutomaton(a.width(), a.reach(), std::move(states), remap[a.start()],
                           std::move(rows));
}

CountSeries series(const TransferAutomaton& a, std::size_t max_length) {
  CountSeries out{a.width(), {}};
  out.terms.reserve(max_length + 1);
  std::vector<BigInt> current(a.size(), 0);
  std::vector<BigInt> next(a.size(), 0);
  current[a.start()] = 1;
  out.terms.push_back(current[a.start()]);
  for (std::size_t n = 1; n <= max_length; ++n) {
    for (BigInt& x : next) x = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (sgn(current[i]) == 0) continue;
      for (const auto& e : a.row(i)) {
        mpz_addmul(next[e.to].get_mpz_t(), current[i].get_mpz_t(), e.weight.get_mpz_t());
      }
    }
    std::swap(current, next);
    out.terms.push_back(current[a.start()]);
  }
  return out;
}

BigInt count_rect(const TransferAutomaton& a, std::size_t length) {
  return series(a, length).terms.back();
}

std::string to_dot(const TransferAutomaton& a) {
  std::ostringstream os;
  os << "digraph automaton {\n";
  os << "  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::string label;
    if (a.reach() == 0) {
      label = "empty";
    } else {
      for (int r = 0; r < a.width(); ++r) {
        if (r > 0) label += "\\n";
        for (int c = 0; c < a.reach(); ++c) label += a.occupied(i, r, c) ? '#' : '.';
      }
    }
    os << "  s" << i << " [label=\"" << label << "\"";
    if (i == a.start()) os << ", peripheries=2";
    os << "];\n";
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (const auto& e : a.row(i)) {
      os << "  s" << i << " -> s" << e.to << " [label=\"" << e.weight.get_str() << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace tesserae
