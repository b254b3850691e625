#include "repl.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "tgame/fan_space.hpp"
#include "tgame/partition_space.hpp"
#include "tgame/scheepers_space.hpp"
#include "tgame/tree_space.hpp"

namespace tgame::cli {

namespace {

constexpr std::size_t kSample = 6;

Seq parse_seq(const std::string& text) {
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw DescriptorError("expected a sequence like (0,1) or (), got '" + text + "'");
  Seq s;
  std::stringstream ss(text.substr(1, text.size() - 2));
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      s.push_back(std::stoull(item, &used));
      if (used != item.size() || item.find('-') != std::string::npos) throw DescriptorError("");
    } catch (const std::exception&) {
      throw DescriptorError("bad sequence entry '" + item + "' in " + text);
    }
  }
  return s;
}

std::uint64_t parse_natural(const std::string& text) {
  try {
    std::size_t used = 0;
    auto v = std::stoull(text, &used);
    if (used == text.size() && text.find('-') == std::string::npos) return v;
  } catch (const std::exception&) {
  }
  throw DescriptorError("expected a natural number, got '" + text + "'");
}

std::string menu(const Space& space) {
  std::string atoms = "full";
  if (dynamic_cast<const TreeSpace*>(&space)) atoms += " | children (s)";
  else if (dynamic_cast<const FanSpace*>(&space)) atoms += " | column n | tail n m";
  else if (dynamic_cast<const PartitionSpace*>(&space)) atoms += " | block (s) | cone (s) [(pins)] [(forbid)]";
  else if (dynamic_cast<const ScheepersSpace*>(&space)) atoms += " | strip j";
  return "atoms: " + atoms + "\nedit: exclude POINT | clear | show | done | quit";
}

std::string sample(const Space& space, const Descriptor& d) {
  auto pts = space.enumerate(d, kSample);
  std::string s = space.format(PointSet(pts.begin(), pts.end()));
  if (pts.size() == kSample) s.insert(s.size() - 1, ", ...");
  return s;
}

/// Reads one non-empty line; throws PlayStopped on end of input.
std::string next_line(std::istream& in, std::ostream& out, const std::string& prompt) {
  std::string line;
  while (true) {
    out << prompt << std::flush;
    if (!std::getline(in, line)) throw PlayStopped("end of input");
    if (line.find_first_not_of(" \t\r") != std::string::npos) return line;
  }
}

std::vector<std::string> words(const std::string& line) {
  std::stringstream ss(line);
  std::vector<std::string> out;
  for (std::string w; ss >> w;) out.push_back(w);
  return out;
}

Atom parse_atom(const std::vector<std::string>& w) {
  auto arg = [&](std::size_t i) -> const std::string& {
    if (i >= w.size()) throw DescriptorError("'" + w[0] + "' needs more arguments");
    return w[i];
  };
  const std::string& cmd = w[0];
  if (cmd == "full") return FullAtom{};
  if (cmd == "children") return ChildrenAtom{parse_seq(arg(1))};
  if (cmd == "column") return ColumnAtom{parse_natural(arg(1))};
  if (cmd == "tail") return ColumnTailAtom{parse_natural(arg(1)), parse_natural(arg(2))};
  if (cmd == "block") return BlockAtom{parse_seq(arg(1))};
  if (cmd == "cone") {
    Seq pins = w.size() > 2 ? parse_seq(w[2]) : Seq{};
    Seq forbid = w.size() > 3 ? parse_seq(w[3]) : Seq{};
    std::sort(pins.begin(), pins.end());
    std::sort(forbid.begin(), forbid.end());
    return ConeAtom{parse_seq(arg(1)), pins, forbid};
  }
  if (cmd == "strip") return StripAtom{parse_natural(arg(1))};
  throw DescriptorError("unknown command '" + cmd + "'");
}

class HumanOne final : public OneStrategy {
 public:
  HumanOne(std::istream& in, std::ostream& out) : in_(in), out_(out) {}
  std::string name() const override { return "human"; }

  OneMove respond(const PlayView& view) override {
    const Space& space = view.space;
    if (!view.history.empty()) out_ << "Two picked " << space.format(view.history.back().two) << "\n";
    out_ << "inning " << view.inning << ": build One's move\n" << menu(space) << "\n";
    std::vector<Atom> atoms;
    PointSet excluded;
    while (true) {
      auto w = words(next_line(in_, out_, "one> "));
      if (w[0] == "quit") throw PlayStopped("quit");
      try {
        if (w[0] == "clear") {
          atoms.clear();
          excluded.clear();
        } else if (w[0] == "show") {
          out_ << "current: " << space.format(space.make(atoms, {}, excluded)) << "\n";
        } else if (w[0] == "exclude") {
          if (w.size() < 2) throw DescriptorError("exclude needs a point");
          excluded.insert(parse_point(space, w[1]));
        } else if (w[0] == "done") {
          Descriptor d = space.make(atoms, {}, excluded);
          if (auto bad = check_inning(space, view.bound, Inning{view.inning, d, {}, {}}, false)) {
            out_ << "rejected: " << bad->message << "\n";
            continue;
          }
          return {d, {}};
        } else {
          Atom a = parse_atom(w);
          if (!space.accepts(a)) throw DescriptorError("'" + w[0] + "' is not an atom of this space");
          atoms.push_back(std::move(a));
        }
      } catch (const DescriptorError& e) {
        out_ << "rejected: " << e.what() << "\n";
      }
    }
  }

 private:
  std::istream& in_;
  std::ostream& out_;
};

class HumanTwo final : public TwoStrategy {
 public:
  HumanTwo(std::istream& in, std::ostream& out, bool strict) : in_(in), out_(out), strict_(strict) {}
  std::string name() const override { return "human"; }

  TwoMove respond(const PlayView& view, const Descriptor& current) override {
    const Space& space = view.space;
    auto budget = view.bound.budget(view.inning);
    out_ << "inning " << view.inning << ": One plays " << space.format(current) << "\n"
         << "  first points: " << sample(space, current) << "\n"
         << "  pick " << (budget ? "at most " + std::to_string(*budget) : std::string("finitely many"))
         << " points separated by spaces, '-' for none, or quit\n";
    while (true) {
      auto w = words(next_line(in_, out_, "two> "));
      if (w[0] == "quit") throw PlayStopped("quit");
      try {
        PointSet pick;
        if (w[0] != "-")
          for (const auto& t : w) pick.insert(parse_point(space, t));
        if (auto bad = check_inning(space, view.bound, Inning{view.inning, current, pick, {}}, strict_)) {
          out_ << "rejected: " << bad->message << "\n";
          continue;
        }
        return {pick, {}};
      } catch (const DescriptorError& e) {
        out_ << "rejected: " << e.what() << "\n";
      }
    }
  }

 private:
  std::istream& in_;
  std::ostream& out_;
  bool strict_;
};

}  // namespace

Point parse_point(const Space& space, const std::string& text) {
  Point q;
  if (!text.empty() && text.front() == '(') {
    Seq s = parse_seq(text);
    bool fan = dynamic_cast<const FanSpace*>(&space) != nullptr;
    bool strips = dynamic_cast<const ScheepersSpace*>(&space) != nullptr;
    if ((fan || strips) && s.size() != 2) throw DescriptorError("expected a pair (n,m), got '" + text + "'");
    if (fan) q = FanSpace::point(s[0], s[1]);
    else if (strips) q = ScheepersSpace::point(s[0], s[1]);
    else q = Point(s);
  } else {
    q = space.point_from_json(json(parse_natural(text)));
  }
  if (!space.is_point(q)) throw DescriptorError("'" + text + "' is not a point of the space");
  return q;
}

std::unique_ptr<OneStrategy> human_one(std::istream& in, std::ostream& out) {
  return std::make_unique<HumanOne>(in, out);
}

std::unique_ptr<TwoStrategy> human_two(std::istream& in, std::ostream& out, bool strict_g1) {
  return std::make_unique<HumanTwo>(in, out, strict_g1);
}

}  // namespace tgame::cli
