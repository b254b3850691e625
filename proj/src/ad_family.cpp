#include "tgame/ad_family.hpp"

#include <algorithm>

namespace tgame {

std::vector<std::string> binary_sequences(std::size_t max_length) {
  std::vector<std::string> out{""};
  for (std::size_t len = 1; len <= max_length; ++len) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
      std::string s(len, '0');
      for (std::size_t i = 0; i < len; ++i)
        if ((v >> (len - 1 - i)) & 1) s[i] = '1';
      out.push_back(std::move(s));
    }
  }
  return out;
}

PointSet AdFamily::branch_union(const std::string& g) const {
  PointSet out;
  for (std::size_t j = 0; j <= g.size(); ++j) {
    const auto& part = a.at(g.substr(0, j));
    out.insert(part.begin(), part.end());
  }
  return out;
}

json AdFamily::to_json(const Space& space) const {
  json j = {{"depth", depth}, {"a", json::object()}, {"warnings", warnings}};
  for (const auto& [s, set] : a) j["a"][s] = space.to_json(set);
  return j;
}

AdFamily build_ad_family(const Space& space, TwoStrategy& two, std::size_t depth, const BoundSpec& bound) {
  AdFamily fam;
  fam.depth = depth;
  PointSet used;
  for (const auto& s : binary_sequences(depth)) {
    Descriptor q = space.remove_finite(space.full(), used);
    fam.q[s] = q;
    two.reset();
    std::vector<Inning> history;
    PointSet reply;
    for (std::size_t j = 0; j <= s.size(); ++j) {
      std::string prefix = s.substr(0, j);
      const Descriptor& qj = fam.q.at(prefix);
      PlayView view{space, bound, j, history};
      TwoMove m = two.respond(view, qj);
      if (j < s.size()) {
        // earlier replies are replayed; the recorded A keeps the chain consistent
        history.push_back(Inning{j, qj, fam.a.at(prefix), m.notes});
      } else {
        reply = std::move(m.pick);
      }
    }
    if (reply.empty() && space.clusters_at_p(q))
      fam.warnings.push_back("degenerate strategy: empty reply at '" + s + "'");
    used.insert(reply.begin(), reply.end());
    fam.a[s] = std::move(reply);
  }
  return fam;
}

Verdict check_prefix_law(const AdFamily& family, std::size_t length) {
  std::vector<std::string> leaves;
  for (const auto& [s, set] : family.a)
    if (s.size() == length) leaves.push_back(s);
  if (leaves.size() < 2) return Verdict::vacuous("fewer than two sequences of length " + std::to_string(length));
  std::vector<PointSet> unions;
  for (const auto& g : leaves) unions.push_back(family.branch_union(g));
  std::size_t pairs = 0;
  for (std::size_t x = 0; x < leaves.size(); ++x) {
    for (std::size_t y = x + 1; y < leaves.size(); ++y) {
      const auto& g = leaves[x];
      const auto& h = leaves[y];
      std::size_t k0 = std::mismatch(g.begin(), g.end(), h.begin()).first - g.begin();
      PointSet brute;
      std::set_intersection(unions[x].begin(), unions[x].end(), unions[y].begin(), unions[y].end(),
                            std::inserter(brute, brute.end()));
      PointSet formula;
      for (std::size_t j = 0; j <= k0; ++j) {
        const auto& part = family.a.at(g.substr(0, j));
        formula.insert(part.begin(), part.end());
      }
      if (brute != formula) return Verdict::fail("prefix law fails for " + g + " and " + h);
      ++pairs;
    }
  }
  return Verdict::pass(std::to_string(pairs) + " pairs");
}

}  // namespace tgame
