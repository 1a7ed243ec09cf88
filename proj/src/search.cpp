#include "arrfree/search.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>

namespace arrfree {

std::string Move::to_string() const {
  return (kind == Kind::Add ? "add " : "delete ") + line.to_string();
}

int Chain::additions() const {
  return static_cast<int>(std::count_if(moves.begin(), moves.end(),
                                        [](const Move& m) { return m.kind == Move::Kind::Add; }));
}

int Chain::deletions() const { return static_cast<int>(moves.size()) - additions(); }

bool verify_chain(const Chain& c) {
  if (c.exponents.size() != c.moves.size() + 1) return false;
  Arrangement cur = c.start;
  for (std::size_t i = 0;; ++i) {
    FreenessResult r = is_free(cur);
    if (!r.is_free() || !r.exponents || !(*r.exponents == c.exponents[i])) return false;
    if (i == c.moves.size()) break;
    const Move& m = c.moves[i];
    const int at = cur.find(m.line);
    if (m.kind == Move::Kind::Add) {
      if (at >= 0) return false;
      cur = cur.with(m.line);
    } else {
      if (at < 0) return false;
      cur = cur.without(at);
    }
  }
  return cur.empty();
}

std::string to_string(Stratum s) {
  switch (s) {
    case Stratum::Join:
      return "join";
    case Stratum::Pencil:
      return "pencil";
    case Stratum::Generic:
      return "generic";
  }
  return "?";
}

std::string to_string(RecursiveStatus s) {
  switch (s) {
    case RecursiveStatus::Yes:
      return "yes";
    case RecursiveStatus::No:
      return "no";
    case RecursiveStatus::Unknown:
      return "unknown";
  }
  return "?";
}

namespace {

void require_free(const Arrangement& a, const LatticeData& l) {
  if (!is_free(a, l).is_free()) fail(ErrorKind::InvalidArgument, "arrangement is not free");
}

std::vector<int> all_but(int size, int skip) {
  std::vector<int> keep;
  keep.reserve(size);
  for (int i = 0; i < size; ++i) {
    if (i != skip) keep.push_back(i);
  }
  return keep;
}

bool avoids_points(const Line& cand, const LatticeData& l, int except) {
  for (int q = 0; q < static_cast<int>(l.points.size()); ++q) {
    if (q != except && incident(l.points[q].point, cand)) return false;
  }
  return true;
}

// Small nonzero integers in the order 1, -1, 2, -2, ...
long nth_parameter(int k) { return k % 2 == 0 ? k / 2 + 1 : -(k / 2 + 1); }

std::optional<Line> pencil_representative(const Arrangement& a, const LatticeData& l, int p) {
  const Triple& c1 = a[l.points[p].incident[0]].coeffs();
  const Triple& c2 = a[l.points[p].incident[1]].coeffs();
  const int budget = 2 * (a.size() + static_cast<int>(l.points.size())) + 4;
  for (int k = 0; k < budget; ++k) {
    Scalar s(nth_parameter(k));
    Line cand(c1[0] + s * c2[0], c1[1] + s * c2[1], c1[2] + s * c2[2]);
    if (!a.contains(cand) && avoids_points(cand, l, p)) return cand;
  }
  return std::nullopt;
}

std::optional<Line> generic_representative(const Arrangement& a, const LatticeData& l) {
  const int budget = 3 * (a.size() + static_cast<int>(l.points.size())) + 4;
  for (int k = 0; k < budget; ++k) {
    Scalar s(nth_parameter(k));
    Line cand(Scalar(1), s, s * s);
    if (!a.contains(cand) && avoids_points(cand, l, -1)) return cand;
  }
  return std::nullopt;
}

AdditionCandidate evaluate_addition(const Arrangement& a, const LatticeData& l, const Line& line, Stratum s,
                                    std::vector<int> points) {
  LatticeData lb = extend_lattice(a, l, line);
  AdditionCandidate c;
  c.line = line;
  c.stratum = s;
  c.points = std::move(points);
  c.n = lb.lines[a.size()].n;
  c.result = is_free(a.with(line), lb);
  return c;
}

Exponents exponents_of(const FreenessResult& r) {
  if (!r.exponents) fail(ErrorKind::SelfCheck, "free verdict without exponents");
  return *r.exponents;
}

}  // namespace

std::vector<DeletionCandidate> deletion_candidates(const Arrangement& a, const LatticeData& l) {
  require_free(a, l);
  std::vector<DeletionCandidate> out;
  for (int h = 0; h < a.size(); ++h) {
    DeletionCandidate d;
    d.index = h;
    d.line = a[h];
    d.n = l.lines[h].n;
    d.result = is_free(a.without(h), restrict_lattice(l, all_but(a.size(), h)));
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<DeletionCandidate> free_deletions(const Arrangement& a, const LatticeData& l) {
  auto all = deletion_candidates(a, l);
  std::erase_if(all, [](const DeletionCandidate& d) { return !d.result.is_free(); });
  return all;
}

std::vector<DeletionCandidate> free_deletions(const Arrangement& a) { return free_deletions(a, compute_lattice(a)); }

std::vector<AdditionCandidate> addition_candidates(const Arrangement& a, const LatticeData& l) {
  require_free(a, l);
  std::vector<AdditionCandidate> out;
  std::set<Line> seen;
  const int np = static_cast<int>(l.points.size());
  for (int p = 0; p < np; ++p) {
    for (int q = p + 1; q < np; ++q) {
      const auto& ip = l.points[p].incident;
      const auto& iq = l.points[q].incident;
      std::vector<int> common;
      std::set_intersection(ip.begin(), ip.end(), iq.begin(), iq.end(), std::back_inserter(common));
      if (!common.empty()) continue;
      Line line = join(l.points[p].point, l.points[q].point);
      if (!seen.insert(line).second) continue;
      out.push_back(evaluate_addition(a, l, line, Stratum::Join, {p, q}));
    }
  }
  if (a.ctx().parametric) return out;
  for (int p = 0; p < np; ++p) {
    auto line = pencil_representative(a, l, p);
    if (!line) fail(ErrorKind::SelfCheck, "no generic pencil member found");
    out.push_back(evaluate_addition(a, l, *line, Stratum::Pencil, {p}));
  }
  auto line = generic_representative(a, l);
  if (!line) fail(ErrorKind::SelfCheck, "no generic line found");
  out.push_back(evaluate_addition(a, l, *line, Stratum::Generic, {}));
  return out;
}

std::vector<AdditionCandidate> free_additions(const Arrangement& a, const LatticeData& l) {
  auto all = addition_candidates(a, l);
  std::erase_if(all, [](const AdditionCandidate& c) { return !c.result.is_free(); });
  return all;
}

std::vector<AdditionCandidate> free_additions(const Arrangement& a) { return free_additions(a, compute_lattice(a)); }

namespace {

// Depth-first search over free deletions of subsets of a fixed arrangement.
// Subsets are bit vectors over the root's line indices.
class InductiveSearch {
 public:
  explicit InductiveSearch(const Arrangement& root) : root_(root) {}

  std::optional<Chain> run() {
    LatticeData l = compute_lattice(root_);
    FreenessResult r = is_free(root_, l);
    if (!r.is_free()) return std::nullopt;
    std::vector<int> all(root_.size());
    for (int i = 0; i < root_.size(); ++i) all[i] = i;
    if (!dfs(all, l, exponents_of(r))) return std::nullopt;

    Chain c;
    c.start = root_;
    c.exponents.push_back(exponents_of(r));
    std::vector<bool> key(root_.size(), true);
    for (int left = root_.size(); left > 0; --left) {
      auto it = choice_.find(key);
      if (it == choice_.end()) fail(ErrorKind::SelfCheck, "broken inductive chain");
      const auto& [line_id, exps] = it->second;
      c.moves.push_back({Move::Kind::Delete, root_[line_id]});
      c.exponents.push_back(exps);
      key[line_id] = false;
    }
    return c;
  }

 private:
  bool dfs(const std::vector<int>& ids, const LatticeData& l, const Exponents& e) {
    if (ids.empty()) return true;
    std::vector<bool> key(root_.size(), false);
    for (int id : ids) key[id] = true;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const int m = static_cast<int>(ids.size());
    bool found = false;
    for (int i = 0; i < m && !found; ++i) {
      // Deletion theorem in rank three: A \ {H} is free iff n_H - 1 is an exponent.
      const int n = l.lines[i].n;
      if (m > 1 && n != e.a + 1 && n != e.b + 1) continue;
      std::vector<int> keep = all_but(m, i);
      LatticeData sub = restrict_lattice(l, keep);
      auto sub_exps = char_poly(sub).factored;
      if (!sub_exps) continue;
      std::vector<int> sub_ids;
      sub_ids.reserve(m - 1);
      for (int k : keep) sub_ids.push_back(ids[k]);
      if (dfs(sub_ids, sub, *sub_exps)) {
        choice_[key] = {ids[i], *sub_exps};
        found = true;
      }
    }
    memo_[key] = found;
    return found;
  }

  const Arrangement& root_;
  std::unordered_map<std::vector<bool>, bool> memo_;
  std::unordered_map<std::vector<bool>, std::pair<int, Exponents>> choice_;
};

struct BfsNode {
  Arrangement arr;
  Exponents exps;
  std::string parent;  // empty for the root
  Move move;           // move from parent to this node
};

}  // namespace

std::optional<Chain> is_inductively_free(const Arrangement& a) { return InductiveSearch(a).run(); }

RecursiveVerdict recursive_freeness_bounded(const Arrangement& a, RecursiveOptions opts) {
  const int max_size = opts.max_size < 0 ? a.size() + 3 : opts.max_size;
  if (max_size < a.size()) fail(ErrorKind::InvalidArgument, "size bound below |A|");
  RecursiveVerdict v;
  v.size_bound = max_size;

  LatticeData l = compute_lattice(a);
  FreenessResult r = is_free(a, l);
  if (!r.is_free()) fail(ErrorKind::InvalidArgument, "arrangement is not free");

  if (auto c = is_inductively_free(a)) {
    v.status = RecursiveStatus::Yes;
    v.chain = std::move(c);
    v.states = 1;
    return v;
  }

  // Empty free neighborhood: neither the first nor the last step of a chain exists.
  auto adds = addition_candidates(a, l);
  auto dels = deletion_candidates(a, l);
  const bool any_add = std::any_of(adds.begin(), adds.end(), [](const auto& c) { return c.result.is_free(); });
  const bool any_del = std::any_of(dels.begin(), dels.end(), [](const auto& d) { return d.result.is_free(); });
  if (!a.empty() && !any_add && !any_del) {
    v.status = RecursiveStatus::No;
    v.refuted_additions = std::move(adds);
    v.refuted_deletions = std::move(dels);
    v.states = 1;
    return v;
  }

  std::map<std::string, BfsNode> nodes;
  std::deque<std::string> queue;
  const std::string root_key = a.canonical_key();
  nodes.emplace(root_key, BfsNode{a, exponents_of(r), "", {}});
  queue.push_back(root_key);

  auto expand = [&](const std::string& key) -> std::optional<std::string> {
    const BfsNode node = nodes.at(key);
    const Arrangement& cur = node.arr;
    LatticeData lc = compute_lattice(cur);
    std::vector<std::pair<Move, Exponents>> next;
    for (auto& d : free_deletions(cur, lc)) next.push_back({{Move::Kind::Delete, d.line}, exponents_of(d.result)});
    if (cur.size() < max_size) {
      auto fa = free_additions(cur, lc);
      std::stable_sort(fa.begin(), fa.end(), [](const auto& x, const auto& y) { return x.n > y.n; });
      for (auto& c : fa) next.push_back({{Move::Kind::Add, c.line}, exponents_of(c.result)});
    }
    for (auto& [mv, exps] : next) {
      Arrangement child = mv.kind == Move::Kind::Add ? cur.with(mv.line) : cur.without(cur.find(mv.line));
      std::string ck = child.canonical_key();
      if (nodes.count(ck)) continue;
      nodes.emplace(ck, BfsNode{child, exps, key, mv});
      if (is_inductively_free(child)) return ck;
      queue.push_back(ck);
    }
    return std::nullopt;
  };

  std::optional<std::string> hit;
  while (!queue.empty() && !hit) {
    if (v.states >= opts.max_states) break;
    std::string key = queue.front();
    queue.pop_front();
    ++v.states;
    hit = expand(key);
  }
  if (!hit) return v;

  std::vector<const BfsNode*> path;
  for (std::string k = *hit; !k.empty(); k = nodes.at(k).parent) path.push_back(&nodes.at(k));
  std::reverse(path.begin(), path.end());
  Chain c;
  c.start = a;
  c.exponents.push_back(path.front()->exps);
  for (std::size_t i = 1; i < path.size(); ++i) {
    c.moves.push_back(path[i]->move);
    c.exponents.push_back(path[i]->exps);
  }
  auto tail = is_inductively_free(path.back()->arr);
  for (std::size_t i = 0; i < tail->moves.size(); ++i) {
    c.moves.push_back(tail->moves[i]);
    c.exponents.push_back(tail->exponents[i + 1]);
  }
  v.status = RecursiveStatus::Yes;
  v.chain = std::move(c);
  return v;
}

}  // namespace arrfree
