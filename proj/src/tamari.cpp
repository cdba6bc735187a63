#include "tamari/tamari.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "tamari/errors.hpp"

namespace tamari {

std::vector<PathWord> covering_successors(const PathWord& p) {
  // Dyck-form paths are ordered inside T_{nm}, where the slope is 1; a
  // cover of an m-Dyck path need not be m-Dyck, so only plain Dyck words
  // are accepted in that form.
  if (p.form() == Form::Dyck && p.m() != 1)
    throw InvalidInput("covering_successors: use m=1 Dyck words (T_{nm})");
  const int slope = p.form() == Form::Ballot ? p.m() : 1;
  const auto& s = p.steps();
  const int len = p.length();
  std::vector<PathWord> out;
  for (int i = 0; i + 1 < len; ++i) {
    if (!s[static_cast<std::size_t>(i)] || s[static_cast<std::size_t>(i + 1)])
      continue;  // need east at i, north at i+1
    // Shortest factor S starting at i+1 that is a translated ballot path.
    long north = 0, east = 0;
    int j = i + 1;
    for (; j < len; ++j) {
      if (s[static_cast<std::size_t>(j)])
        ++east;
      else
        ++north;
      if (east == slope * north) break;
    }
    if (j == len) throw AlgebraError("corner swap: factor never closes");
    // Q = prefix . S . east . suffix
    std::vector<bool> steps;
    steps.reserve(static_cast<std::size_t>(len));
    for (int k = 0; k < i; ++k) steps.push_back(s[static_cast<std::size_t>(k)]);
    for (int k = i + 1; k <= j; ++k)
      steps.push_back(s[static_cast<std::size_t>(k)]);
    steps.push_back(true);
    for (int k = j + 1; k < len; ++k)
      steps.push_back(s[static_cast<std::size_t>(k)]);
    out.push_back(PathWord::from_bits(std::move(steps), p.m(), p.form()));
  }
  return out;
}

TamariPoset TamariPoset::build(int m, int n, std::uint64_t cap) {
  TamariPoset poset;
  poset.m_ = m;
  poset.n_ = n;
  poset.verts_ = enumerate_paths(m, n, cap);
  poset.finish();
  return poset;
}

TamariPoset TamariPoset::build_from(std::vector<PathWord> vertices) {
  TamariPoset poset;
  std::sort(vertices.begin(), vertices.end());
  poset.verts_ = std::move(vertices);
  if (!poset.verts_.empty()) {
    poset.m_ = poset.verts_.front().m();
    poset.n_ = poset.verts_.front().size();
  }
  poset.finish();
  return poset;
}

void TamariPoset::finish() {
  const int V = size();
  std::map<PathWord, int> index;
  for (int i = 0; i < V; ++i) index.emplace(verts_[static_cast<std::size_t>(i)], i);

  hasse_.assign(static_cast<std::size_t>(V), {});
  std::vector<int> indeg(static_cast<std::size_t>(V), 0);
  for (int i = 0; i < V; ++i) {
    for (const PathWord& q : covering_successors(verts_[static_cast<std::size_t>(i)])) {
      auto it = index.find(q);
      if (it == index.end())
        throw AlgebraError("covering successor escapes the vertex set");
      hasse_[static_cast<std::size_t>(i)].push_back(it->second);
      ++indeg[static_cast<std::size_t>(it->second)];
    }
    std::sort(hasse_[static_cast<std::size_t>(i)].begin(),
              hasse_[static_cast<std::size_t>(i)].end());
  }

  // Topological order of the covering DAG (Kahn).
  topo_.clear();
  std::vector<int> deg = indeg;
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int i = 0; i < V; ++i)
    if (deg[static_cast<std::size_t>(i)] == 0) ready.push(i);
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    topo_.push_back(v);
    for (int w : hasse_[static_cast<std::size_t>(v)])
      if (--deg[static_cast<std::size_t>(w)] == 0) ready.push(w);
  }
  if (static_cast<int>(topo_.size()) != V)
    throw AlgebraError("covering graph is not acyclic");

  // Reflexive-transitive closure via BFS in reverse topological order.
  const std::size_t words = static_cast<std::size_t>((V + 63) / 64);
  up_.assign(static_cast<std::size_t>(V), std::vector<std::uint64_t>(words, 0));
  for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
    int v = *it;
    auto& row = up_[static_cast<std::size_t>(v)];
    row[static_cast<std::size_t>(v >> 6)] |= 1ull << (v & 63);
    for (int w : hasse_[static_cast<std::size_t>(v)]) {
      const auto& next = up_[static_cast<std::size_t>(w)];
      for (std::size_t k = 0; k < words; ++k) row[k] |= next[k];
    }
  }
  down_.assign(static_cast<std::size_t>(V), std::vector<std::uint64_t>(words, 0));
  for (int i = 0; i < V; ++i)
    for (int j = 0; j < V; ++j)
      if (bit(up_[static_cast<std::size_t>(i)], j))
        down_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i >> 6)] |=
            1ull << (i & 63);

  // Longest chain between comparable pairs: DP along topological order.
  dist_.assign(static_cast<std::size_t>(V), std::vector<int>(static_cast<std::size_t>(V), -1));
  for (int p = 0; p < V; ++p) {
    auto& dp = dist_[static_cast<std::size_t>(p)];
    dp[static_cast<std::size_t>(p)] = 0;
    for (int v : topo_) {
      if (dp[static_cast<std::size_t>(v)] < 0) continue;
      for (int w : hasse_[static_cast<std::size_t>(v)])
        dp[static_cast<std::size_t>(w)] = std::max(
            dp[static_cast<std::size_t>(w)], dp[static_cast<std::size_t>(v)] + 1);
    }
  }
}

int TamariPoset::index_of(const PathWord& p) const {
  auto it = std::lower_bound(verts_.begin(), verts_.end(), p);
  if (it == verts_.end() || !(*it == p))
    throw InvalidInput("path is not a vertex of this poset: " + p.to_string());
  return static_cast<int>(it - verts_.begin());
}

bool TamariPoset::leq(int p, int q) const {
  return bit(up_[static_cast<std::size_t>(p)], q);
}

int TamariPoset::meet(int p, int q) const {
  const std::size_t words = up_.empty() ? 0 : up_[0].size();
  std::vector<std::uint64_t> common(words);
  for (std::size_t k = 0; k < words; ++k)
    common[k] = down_[static_cast<std::size_t>(p)][k] &
                down_[static_cast<std::size_t>(q)][k];
  int found = -1;
  for (int r = 0; r < size(); ++r) {
    if (!bit(common, r)) continue;
    // r is maximal in the common down-set if nothing else in it is above r.
    bool maximal = true;
    for (std::size_t k = 0; k < words && maximal; ++k) {
      std::uint64_t above = up_[static_cast<std::size_t>(r)][k] & common[k];
      if (k == static_cast<std::size_t>(r >> 6)) above &= ~(1ull << (r & 63));
      if (above) maximal = false;
    }
    if (!maximal) continue;
    if (found >= 0)
      throw VerificationMismatch("meet is not unique: lattice property violated");
    found = r;
  }
  if (found < 0) throw VerificationMismatch("meet does not exist");
  return found;
}

int TamariPoset::join(int p, int q) const {
  const std::size_t words = up_.empty() ? 0 : up_[0].size();
  std::vector<std::uint64_t> common(words);
  for (std::size_t k = 0; k < words; ++k)
    common[k] = up_[static_cast<std::size_t>(p)][k] &
                up_[static_cast<std::size_t>(q)][k];
  int found = -1;
  for (int r = 0; r < size(); ++r) {
    if (!bit(common, r)) continue;
    bool minimal = true;
    for (std::size_t k = 0; k < words && minimal; ++k) {
      std::uint64_t below = down_[static_cast<std::size_t>(r)][k] & common[k];
      if (k == static_cast<std::size_t>(r >> 6)) below &= ~(1ull << (r & 63));
      if (below) minimal = false;
    }
    if (!minimal) continue;
    if (found >= 0)
      throw VerificationMismatch("join is not unique: lattice property violated");
    found = r;
  }
  if (found < 0) throw VerificationMismatch("join does not exist");
  return found;
}

int TamariPoset::longest_chain(int p, int q) const {
  int d = dist_[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
  if (d < 0) throw InvalidInput("longest_chain: incomparable pair");
  return d;
}

int TamariPoset::bottom() const {
  for (int i = 0; i < size(); ++i) {
    bool all = true;
    for (int j = 0; j < size() && all; ++j) all = leq(i, j);
    if (all) return i;
  }
  throw AlgebraError("poset has no bottom element");
}

int TamariPoset::top() const {
  for (int i = 0; i < size(); ++i) {
    bool all = true;
    for (int j = 0; j < size() && all; ++j) all = leq(j, i);
    if (all) return i;
  }
  throw AlgebraError("poset has no top element");
}

bool TamariPoset::is_partial_order() const {
  const int V = size();
  for (int i = 0; i < V; ++i) {
    if (!leq(i, i)) return false;
    for (int j = 0; j < V; ++j) {
      if (i != j && leq(i, j) && leq(j, i)) return false;
      if (!leq(i, j)) continue;
      for (int k = 0; k < V; ++k)
        if (leq(j, k) && !leq(i, k)) return false;
    }
  }
  return true;
}

bool TamariPoset::is_lattice() const {
  try {
    for (int i = 0; i < size(); ++i)
      for (int j = i; j < size(); ++j) {
        meet(i, j);
        join(i, j);
      }
  } catch (const VerificationMismatch&) {
    return false;
  }
  return true;
}

std::vector<Interval> enumerate_intervals(const TamariPoset& poset) {
  std::vector<Interval> out;
  for (int p = 0; p < poset.size(); ++p) {
    int c = contacts(poset.vertex(p));
    for (int q = 0; q < poset.size(); ++q) {
      if (!poset.leq(p, q)) continue;
      Interval iv;
      iv.lower = p;
      iv.upper = q;
      iv.contacts = c;
      iv.rise = initial_rise(poset.vertex(q));
      iv.dist = poset.longest_chain(p, q);
      out.push_back(iv);
    }
  }
  return out;
}

bool check_sublattice_embedding(int m, int n) {
  TamariPoset small = TamariPoset::build(m, n);
  TamariPoset big = TamariPoset::build(1, m * n);

  // Image of a ballot path: its m-Dyck word read as a 1-ballot word.
  auto image = [&](const PathWord& p) {
    PathWord d = ballot_to_mdyck(p);
    return big.index_of(PathWord::from_bits(d.steps(), 1, Form::Ballot));
  };
  std::vector<int> img(static_cast<std::size_t>(small.size()));
  for (int i = 0; i < small.size(); ++i)
    img[static_cast<std::size_t>(i)] = image(small.vertex(i));

  // Image set == elements of T_{nm} above (u^m d^m)^n.
  int base = big.index_of(PathWord::from_bits(
      ballot_to_mdyck(PathWord::bottom(m, n)).steps(), 1, Form::Ballot));
  std::vector<bool> in_img(static_cast<std::size_t>(big.size()), false);
  for (int v : img) in_img[static_cast<std::size_t>(v)] = true;
  for (int j = 0; j < big.size(); ++j)
    if (in_img[static_cast<std::size_t>(j)] != big.leq(base, j)) return false;

  // Order isomorphism.
  for (int i = 0; i < small.size(); ++i)
    for (int j = 0; j < small.size(); ++j)
      if (small.leq(i, j) != big.leq(img[static_cast<std::size_t>(i)],
                                     img[static_cast<std::size_t>(j)]))
        return false;

  // Covering relations correspond: q covers p in the sublattice iff
  // nothing of the image sits strictly between.
  for (int i = 0; i < small.size(); ++i)
    for (int j = 0; j < small.size(); ++j) {
      if (i == j) continue;
      bool covers_small =
          std::binary_search(small.hasse()[static_cast<std::size_t>(i)].begin(),
                             small.hasse()[static_cast<std::size_t>(i)].end(), j);
      bool covers_sub = false;
      int a = img[static_cast<std::size_t>(i)], b = img[static_cast<std::size_t>(j)];
      if (big.leq(a, b)) {
        covers_sub = true;
        for (int r : img) {
          if (r == a || r == b) continue;
          if (big.leq(a, r) && big.leq(r, b)) {
            covers_sub = false;
            break;
          }
        }
      }
      if (covers_small != covers_sub) return false;
    }
  return true;
}

namespace {

// Splits a Dyck bit word at its first return to the axis:
// w = u A d B with A, B Dyck words.
void first_return_split(const std::vector<bool>& w, std::vector<bool>* arch,
                        std::vector<bool>* rest) {
  long h = 0;
  std::size_t pos = 0;
  for (; pos < w.size(); ++pos) {
    h += w[pos] ? -1 : 1;
    if (h == 0) break;
  }
  if (w.empty() || pos == w.size())
    throw AlgebraError("first_return_split: word never returns to the axis");
  arch->assign(w.begin() + 1, w.begin() + static_cast<long>(pos));
  rest->assign(w.begin() + static_cast<long>(pos) + 1, w.end());
}

PathWord dyck1(std::vector<bool> bits) {
  return PathWord::from_bits(std::move(bits), 1, Form::Dyck);
}

// 0-based step position of contact #idx (0 = origin).
std::size_t contact_position(const std::vector<bool>& w, int idx) {
  if (idx == 0) return 0;
  long h = 0;
  int seen = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    h += w[i] ? -1 : 1;
    if (h == 0 && ++seen == idx) return i + 1;
  }
  throw InvalidInput("contact index out of range");
}

}  // namespace

std::pair<PointedDyckInterval, DyckInterval> decompose_interval(
    const DyckInterval& interval) {
  const PathWord& P = interval.lower;
  const PathWord& Q = interval.upper;
  if (P.form() != Form::Dyck || Q.form() != Form::Dyck)
    throw InvalidInput("decompose_interval: paths must be in Dyck form");
  if (P.size() != Q.size())
    throw InvalidInput("decompose_interval: size mismatch");
  if (P.empty()) throw InvalidInput("decompose_interval: size-0 interval");

  // Q = u Q1 d Q2 at the first return of Q.
  std::vector<bool> q1, q2;
  first_return_split(Q.steps(), &q1, &q2);

  // P2 = suffix of P with the same size as Q2; it starts at a contact of P.
  std::size_t cut = P.steps().size() - q2.size();
  std::vector<bool> p1(P.steps().begin(),
                       P.steps().begin() + static_cast<long>(cut));
  std::vector<bool> p2(P.steps().begin() + static_cast<long>(cut),
                       P.steps().end());
  {
    long h = 0;
    for (bool e : p1) h += e ? -1 : 1;
    if (h != 0)
      throw InvalidInput("decompose_interval: suffix cut is not at a contact");
  }

  // P1 = u P1l d P1r at the first return of P1.
  std::vector<bool> p1l, p1r;
  first_return_split(p1, &p1l, &p1r);

  std::vector<bool> lower1 = p1l;
  lower1.insert(lower1.end(), p1r.begin(), p1r.end());

  PointedDyckInterval pointed;
  pointed.interval = DyckInterval{dyck1(lower1), dyck1(q1)};
  pointed.contact_index = contacts(dyck1(p1l)) - 1;
  return {pointed, DyckInterval{dyck1(p2), dyck1(q2)}};
}

DyckInterval recompose_interval(const PointedDyckInterval& pointed,
                                const DyckInterval& second) {
  const std::vector<bool>& lower1 = pointed.interval.lower.steps();
  std::size_t split = contact_position(lower1, pointed.contact_index);

  std::vector<bool> P;
  P.push_back(false);  // u
  P.insert(P.end(), lower1.begin(), lower1.begin() + static_cast<long>(split));
  P.push_back(true);  // d
  P.insert(P.end(), lower1.begin() + static_cast<long>(split), lower1.end());
  P.insert(P.end(), second.lower.steps().begin(), second.lower.steps().end());

  std::vector<bool> Q;
  Q.push_back(false);
  Q.insert(Q.end(), pointed.interval.upper.steps().begin(),
           pointed.interval.upper.steps().end());
  Q.push_back(true);
  Q.insert(Q.end(), second.upper.steps().begin(), second.upper.steps().end());

  return DyckInterval{dyck1(std::move(P)), dyck1(std::move(Q))};
}

}  // namespace tamari
