#ifndef BECK_GROEBNER_HPP
#define BECK_GROEBNER_HPP

// Noncommutative Groebner bases in the free algebra on 2n letters under a
// weight-first, then left-lexicographic order.
//
// Completion is round based: each round takes every pending overlap of the
// smallest weight, reduces the differences against a frozen snapshot of the
// basis (optionally on several threads), row reduces the nonzero results and
// adjoins them in leading-word order. The result does not depend on the
// thread count.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "beck/errors.hpp"
#include "beck/free_algebra.hpp"
#include "beck/relations.hpp"

namespace beck {

/// Weight first, then left-lexicographic with respect to a ranking of the
/// 2n letters (position 0 is the greatest letter).
class MonomialOrder {
 public:
  /// l_n > r_n > ... > l_1 > r_1
  static MonomialOrder standard(std::size_t rank) {
    std::vector<char> ranking;
    for (std::size_t p = 0; p < 2 * rank; ++p) ranking.push_back(default_letter(2 * rank, p));
    return MonomialOrder(std::move(ranking));
  }

  /// `descending` lists every letter code once, greatest first.
  static MonomialOrder from_ranking(std::vector<char> descending) {
    std::vector<bool> seen(descending.size(), false);
    for (char c : descending) {
      const auto u = static_cast<unsigned char>(c);
      if (u >= descending.size() || seen[u]) throw std::invalid_argument("ranking is not a permutation");
      seen[u] = true;
    }
    return MonomialOrder(std::move(descending));
  }

  std::size_t letters() const noexcept { return letter_at_.size(); }
  bool is_standard() const {
    for (std::size_t i = 0; i < letter_at_.size(); ++i)
      if (letter_at_[i] != default_letter(letter_at_.size(), i)) return false;
    return true;
  }
  const std::vector<char>& ranking() const noexcept { return letter_at_; }

  /// -1, 0, 1 as u <, =, > v.
  int compare(const FreeWord& u, const FreeWord& v) const {
    if (u.size() != v.size()) return u.size() < v.size() ? -1 : 1;
    for (std::size_t i = 0; i < u.size(); ++i) {
      const auto a = position(u[i]), b = position(v[i]);
      if (a != b) return a < b ? 1 : -1;
    }
    return 0;
  }

  /// Relabels letters so that code order agrees with this order.
  FreeWord to_internal(const FreeWord& w) const { return relabel(w, internal_); }
  FreeWord to_external(const FreeWord& w) const { return relabel(w, external_); }

  FreePolynomial to_internal(const FreePolynomial& p) const { return relabel(p, internal_); }
  FreePolynomial to_external(const FreePolynomial& p) const { return relabel(p, external_); }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.letter_at_ == b.letter_at_;
  }

 private:
  explicit MonomialOrder(std::vector<char> descending) : letter_at_(std::move(descending)) {
    const std::size_t n = letter_at_.size();
    position_.resize(n);
    internal_.resize(n);
    external_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto c = static_cast<unsigned char>(letter_at_[i]);
      const char code = default_letter(n, i);
      position_[c] = static_cast<char>(i);
      internal_[c] = code;
      external_[static_cast<unsigned char>(code)] = letter_at_[i];
    }
  }

  /// Code of the letter at position p of the default rank on `letters` letters.
  static char default_letter(std::size_t letters, std::size_t p) {
    return static_cast<char>((letters - 1 - p) ^ 1u);
  }

  std::size_t position(char c) const { return static_cast<unsigned char>(position_.at(static_cast<unsigned char>(c))); }

  static FreeWord relabel(const FreeWord& w, const std::vector<char>& map) {
    std::string s = w.codes();
    for (auto& c : s) c = map.at(static_cast<unsigned char>(c));
    return FreeWord(std::move(s));
  }

  static FreePolynomial relabel(const FreePolynomial& p, const std::vector<char>& map) {
    std::vector<FreePolynomial::Term> terms;
    for (const auto& t : p.terms()) terms.push_back({relabel(t.word, map), t.coeff});
    return FreePolynomial::from_terms(p.field(), std::move(terms));
  }

  std::vector<char> letter_at_;  // position -> letter code
  std::vector<char> position_;   // letter code -> position
  std::vector<char> internal_;   // letter code -> code with the same default rank
  std::vector<char> external_;
};

/// Aho-Corasick automaton over a set of leading words: finds factor
/// occurrences and drives normal-word enumeration.
class LeadingWordIndex {
 public:
  struct Match {
    std::size_t pattern;
    std::size_t start;
  };

  LeadingWordIndex() = default;

  LeadingWordIndex(std::size_t alphabet, const std::vector<FreeWord>& patterns)
      : alphabet_(alphabet), lengths_() {
    goto_.assign(alphabet_, -1);
    output_.push_back(-1);
    for (std::size_t p = 0; p < patterns.size(); ++p) {
      lengths_.push_back(patterns[p].size());
      std::size_t s = 0;
      for (std::size_t i = 0; i < patterns[p].size(); ++i) {
        const auto c = letter(patterns[p][i]);
        if (goto_[s * alphabet_ + c] < 0) {
          goto_[s * alphabet_ + c] = static_cast<std::int32_t>(output_.size());
          output_.push_back(-1);
          goto_.resize(goto_.size() + alphabet_, -1);
        }
        s = static_cast<std::size_t>(goto_[s * alphabet_ + c]);
      }
      // Shortest pattern wins when several end at the same state.
      if (output_[s] < 0) output_[s] = static_cast<std::int32_t>(p);
    }
    // Breadth-first fail links; complete the goto function into a DFA.
    std::vector<std::int32_t> fail(output_.size(), 0);
    std::deque<std::size_t> queue;
    for (std::size_t c = 0; c < alphabet_; ++c) {
      auto& t = goto_[c];
      if (t < 0) {
        t = 0;
      } else {
        fail[static_cast<std::size_t>(t)] = 0;
        queue.push_back(static_cast<std::size_t>(t));
      }
    }
    while (!queue.empty()) {
      const std::size_t s = queue.front();
      queue.pop_front();
      const auto f = static_cast<std::size_t>(fail[s]);
      if (output_[s] < 0) output_[s] = output_[f];
      for (std::size_t c = 0; c < alphabet_; ++c) {
        auto& t = goto_[s * alphabet_ + c];
        if (t < 0) {
          t = goto_[f * alphabet_ + c];
        } else {
          fail[static_cast<std::size_t>(t)] = goto_[f * alphabet_ + c];
          queue.push_back(static_cast<std::size_t>(t));
        }
      }
    }
  }

  std::size_t alphabet() const noexcept { return alphabet_; }
  std::size_t root() const noexcept { return 0; }
  std::size_t next(std::size_t state, char c) const {
    return static_cast<std::size_t>(goto_[state * alphabet_ + letter(c)]);
  }
  /// True if some pattern ends at this state.
  bool is_match(std::size_t state) const { return output_[state] >= 0; }
  std::size_t states() const noexcept { return output_.size(); }

  /// Occurrence with the leftmost end position.
  std::optional<Match> find(const FreeWord& w) const {
    if (goto_.empty()) return std::nullopt;
    std::size_t s = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      s = next(s, w[i]);
      if (output_[s] >= 0) {
        const auto p = static_cast<std::size_t>(output_[s]);
        return Match{p, i + 1 - lengths_[p]};
      }
    }
    return std::nullopt;
  }

  bool is_normal(const FreeWord& w) const { return !find(w).has_value(); }

 private:
  std::size_t letter(char c) const {
    const auto u = static_cast<std::size_t>(static_cast<unsigned char>(c));
    if (u >= alphabet_) throw std::out_of_range("letter outside alphabet");
    return u;
  }

  std::size_t alphabet_ = 0;
  std::vector<std::size_t> lengths_;
  std::vector<std::int32_t> goto_;
  std::vector<std::int32_t> output_;
};

namespace detail {

/// Full normal form of f against `basis` (monic, leading words indexed by
/// `index`). Letters are internal codes.
inline FreePolynomial reduce_against(const FreePolynomial& f, const std::vector<FreePolynomial>& basis,
                                     const LeadingWordIndex& index) {
  std::map<FreeWord, Scalar, WordGreater> acc;
  for (const auto& t : f.terms()) acc.emplace(t.word, t.coeff);
  std::vector<FreePolynomial::Term> done;
  while (!acc.empty()) {
    auto head = acc.begin();
    const auto match = index.find(head->first);
    if (!match) {
      done.push_back({head->first, head->second});
      acc.erase(head);
      continue;
    }
    const FreePolynomial& g = basis[match->pattern];
    const FreeWord& w = head->first;
    const FreeWord s = w.prefix(match->start);
    const FreeWord t = w.suffix_from(match->start + g.leading_word().size());
    const Scalar c = head->second;
    acc.erase(head);
    for (std::size_t i = 1; i < g.terms().size(); ++i) {
      const auto& term = g.terms()[i];
      FreeWord key = s + term.word + t;
      const Scalar delta = c * term.coeff;
      auto [it, inserted] = acc.try_emplace(std::move(key), -delta);
      if (!inserted) {
        it->second -= delta;
        if (it->second.is_zero()) acc.erase(it);
      }
    }
  }
  return FreePolynomial::from_sorted_terms(f.field(), std::move(done));
}

struct Ambiguity {
  FreeWord a, c;  // LM(g) = a b, LM(h) = b c
  std::size_t overlap = 0;
};

/// Proper overlaps: a suffix of `u` equal to a prefix of `v`, with both
/// a and c nonempty.
inline std::vector<Ambiguity> proper_overlaps(const FreeWord& u, const FreeWord& v) {
  std::vector<Ambiguity> out;
  const std::size_t m = std::min(u.size(), v.size());
  for (std::size_t k = 1; k < m + 1; ++k) {
    if (k >= u.size() || k >= v.size()) continue;
    if (u.codes().compare(u.size() - k, k, v.codes(), 0, k) == 0)
      out.push_back({u.prefix(u.size() - k), v.suffix_from(k), k});
  }
  return out;
}

}  // namespace detail

/// g c - a h for every overlap LM(g) = a b, LM(h) = b c, followed by
/// g - s h t for every occurrence LM(g) = s LM(h) t (inclusion). Inputs must
/// be monic; the default order is used.
inline std::vector<FreePolynomial> overlap_differences(const FreePolynomial& g, const FreePolynomial& h) {
  std::vector<FreePolynomial> out;
  const FreeWord& u = g.leading_word();
  const FreeWord& v = h.leading_word();
  for (const auto& amb : detail::proper_overlaps(u, v))
    out.push_back(g.sandwich(FreeWord(), amb.c) - h.sandwich(amb.a, FreeWord()));
  if (v.size() <= u.size() && !(g == h)) {
    for (std::size_t pos = u.find(v); pos != std::string::npos;
         pos = u.codes().find(v.codes(), pos + 1))
      out.push_back(g - h.sandwich(u.prefix(pos), u.suffix_from(pos + v.size())));
  }
  return out;
}

struct CompletionStats {
  std::size_t rounds = 0;
  std::size_t overlaps_processed = 0;
  std::size_t reductions_to_zero = 0;
  std::size_t elements_adjoined = 0;
};

class GroebnerState {
 public:
  static constexpr std::size_t unbounded = std::numeric_limits<std::size_t>::max();

  GroebnerState(FieldSpec field, std::size_t rank, MonomialOrder order)
      : field_(field), rank_(rank), order_(std::move(order)) {
    rebuild_index();
  }

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t rank() const noexcept { return rank_; }
  const MonomialOrder& order() const noexcept { return order_; }

  /// Reduced basis in external letters, sorted by ascending leading word.
  std::vector<FreePolynomial> basis() const {
    std::vector<FreePolynomial> out;
    for (const auto& p : internal_) out.push_back(order_.to_external(p));
    return out;
  }
  std::vector<FreeWord> leading_words() const {
    std::vector<FreeWord> out;
    for (const auto& p : internal_) out.push_back(order_.to_external(p.leading_word()));
    return out;
  }
  std::size_t size() const noexcept { return internal_.size(); }
  const std::vector<FreePolynomial>& internal_basis() const noexcept { return internal_; }
  const LeadingWordIndex& index() const noexcept { return index_; }

  std::optional<std::size_t> truncation_weight() const noexcept { return truncation_; }
  std::size_t complete_below() const noexcept { return complete_below_; }
  bool is_complete() const noexcept { return complete_; }
  bool is_homogeneous() const noexcept { return homogeneous_; }
  std::size_t discarded() const noexcept { return discarded_; }
  const CompletionStats& stats() const noexcept { return stats_; }

  /// Normal words of weight w are a basis of the quotient at weight w.
  bool certified(std::size_t w) const noexcept { return complete_ || w < complete_below_; }

  /// Normal form; letters are external.
  FreePolynomial reduce(const FreePolynomial& f) const {
    if (!(f.field() == field_)) throw FieldMismatch(field_.to_string(), f.field().to_string());
    return order_.to_external(detail::reduce_against(order_.to_internal(f), internal_, index_));
  }

  void set_basis(std::vector<FreePolynomial> internal_sorted) {
    internal_ = std::move(internal_sorted);
    rebuild_index();
  }
  void set_certificate(std::optional<std::size_t> truncation, std::size_t complete_below, bool complete,
                       bool homogeneous, std::size_t discarded) {
    truncation_ = truncation;
    complete_below_ = complete_below;
    complete_ = complete;
    homogeneous_ = homogeneous;
    discarded_ = discarded;
  }
  void set_stats(const CompletionStats& s) { stats_ = s; }

 private:
  void rebuild_index() {
    std::vector<FreeWord> lms;
    for (const auto& p : internal_) lms.push_back(p.leading_word());
    index_ = LeadingWordIndex(2 * rank_, lms);
  }

  FieldSpec field_;
  std::size_t rank_;
  MonomialOrder order_;
  std::vector<FreePolynomial> internal_;
  LeadingWordIndex index_;
  std::optional<std::size_t> truncation_;
  std::size_t complete_below_ = 0;
  bool complete_ = false;
  bool homogeneous_ = true;
  std::size_t discarded_ = 0;
  CompletionStats stats_;
};

inline FreePolynomial reduce(const FreePolynomial& f, const GroebnerState& st) { return st.reduce(f); }

namespace detail {

class Completion {
 public:
  Completion(const FieldSpec& field, std::size_t rank, std::size_t cap, unsigned threads)
      : field_(field), rank_(rank), cap_(cap), threads_(std::max(1u, threads)) {}

  void run(std::vector<FreePolynomial> initial) {
    row_reduce(initial);
    adjoin(std::move(initial));
    while (!pending_.empty()) {
      const std::size_t w = pending_.begin()->weight;
      if (w > cap_) {
        discarded_ = pending_.size();
        pending_.clear();
        break;
      }
      std::vector<FreePolynomial> diffs;
      while (!pending_.empty() && pending_.begin()->weight == w) {
        const Pair p = *pending_.begin();
        pending_.erase(pending_.begin());
        auto gi = slot_.find(p.g), hi = slot_.find(p.h);
        if (gi == slot_.end() || hi == slot_.end()) continue;
        const FreePolynomial& g = elements_[gi->second].poly;
        const FreePolynomial& h = elements_[hi->second].poly;
        const FreeWord& u = g.leading_word();
        const FreeWord& v = h.leading_word();
        // Leading words can change only through removal, which drops the id.
        const FreeWord a = u.prefix(u.size() - p.overlap);
        const FreeWord c = v.suffix_from(p.overlap);
        diffs.push_back(g.sandwich(FreeWord(), c) - h.sandwich(a, FreeWord()));
      }
      ++stats_.rounds;
      stats_.overlaps_processed += diffs.size();
      std::vector<FreePolynomial> reduced = reduce_all(diffs);
      std::vector<FreePolynomial> fresh;
      for (auto& r : reduced) {
        if (r.is_zero())
          ++stats_.reductions_to_zero;
        else
          fresh.push_back(std::move(r));
      }
      if (fresh.empty()) continue;
      row_reduce(fresh);
      adjoin(std::move(fresh));
    }
  }

  std::vector<FreePolynomial> sorted_basis() const {
    std::vector<FreePolynomial> out;
    for (const auto& e : elements_) out.push_back(e.poly);
    std::sort(out.begin(), out.end(), [](const FreePolynomial& a, const FreePolynomial& b) {
      return WordGreater{}(b.leading_word(), a.leading_word());
    });
    return out;
  }

  std::size_t discarded() const noexcept { return discarded_; }
  const CompletionStats& stats() const noexcept { return stats_; }

 private:
  struct Element {
    std::size_t id;
    FreePolynomial poly;
  };

  struct Pair {
    std::size_t weight;
    FreeWord word;
    std::size_t g, h, overlap;
    friend bool operator<(const Pair& x, const Pair& y) {
      if (x.weight != y.weight) return x.weight < y.weight;
      if (!(x.word == y.word)) return WordGreater{}(y.word, x.word);
      return std::tie(x.g, x.h, x.overlap) < std::tie(y.g, y.h, y.overlap);
    }
  };

  LeadingWordIndex build_index(std::vector<FreePolynomial>& polys) const {
    std::vector<FreeWord> lms;
    for (const auto& p : polys) lms.push_back(p.leading_word());
    return LeadingWordIndex(2 * rank_, lms);
  }

  std::vector<FreePolynomial> snapshot() const {
    std::vector<FreePolynomial> out;
    out.reserve(elements_.size());
    for (const auto& e : elements_) out.push_back(e.poly);
    return out;
  }

  std::vector<FreePolynomial> reduce_all(const std::vector<FreePolynomial>& polys) const {
    std::vector<FreePolynomial> basis = snapshot();
    const LeadingWordIndex index = build_index(basis);
    std::vector<FreePolynomial> out(polys.size(), FreePolynomial(field_));
    if (threads_ == 1 || polys.size() < 2) {
      for (std::size_t i = 0; i < polys.size(); ++i) out[i] = reduce_against(polys[i], basis, index);
      return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads_; ++t)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < polys.size(); i = next++)
          out[i] = reduce_against(polys[i], basis, index);
      });
    for (auto& th : pool) th.join();
    return out;
  }

  // Adds row-reduced monic polynomials, restores interreduction, and queues
  // the overlaps of every element that is new after the dust settles.
  void adjoin(std::vector<FreePolynomial> fresh) {
    std::vector<std::size_t> added;
    for (auto& p : fresh) added.push_back(insert(std::move(p)));

    for (;;) {
      std::vector<FreePolynomial> basis = snapshot();
      const LeadingWordIndex index = build_index(basis);
      // An element is redundant when another leading word is a factor of
      // its own; equal leading words keep the older element.
      std::vector<std::size_t> doomed;
      for (std::size_t i = 0; i < basis.size(); ++i) {
        const FreeWord& w = basis[i].leading_word();
        for (std::size_t j = 0; j < basis.size(); ++j) {
          if (i == j) continue;
          const FreeWord& v = basis[j].leading_word();
          if (v.size() > w.size() || !v.divides(w)) continue;
          if (v.size() == w.size() && elements_[j].id > elements_[i].id) continue;
          doomed.push_back(i);
          break;
        }
      }
      if (doomed.empty()) break;
      std::vector<FreePolynomial> removed;
      for (auto it = doomed.rbegin(); it != doomed.rend(); ++it) {
        removed.push_back(std::move(elements_[*it].poly));
        elements_.erase(elements_.begin() + static_cast<std::ptrdiff_t>(*it));
      }
      reindex();
      std::vector<FreePolynomial> rest = snapshot();
      const LeadingWordIndex rest_index = build_index(rest);
      std::vector<FreePolynomial> back;
      for (auto& r : removed) {
        FreePolynomial n = reduce_against(r, rest, rest_index);
        if (!n.is_zero()) back.push_back(std::move(n));
      }
      row_reduce(back);
      for (auto& p : back) added.push_back(insert(std::move(p)));
    }
    tail_reduce();
    for (std::size_t id : added) {
      auto it = slot_.find(id);
      if (it == slot_.end()) continue;
      queue_pairs(it->second);
    }
    stats_.elements_adjoined += added.size();
  }

  std::size_t insert(FreePolynomial p) {
    const std::size_t id = next_id_++;
    slot_[id] = elements_.size();
    elements_.push_back(Element{id, std::move(p)});
    return id;
  }

  void reindex() {
    slot_.clear();
    for (std::size_t i = 0; i < elements_.size(); ++i) slot_[elements_[i].id] = i;
  }

  void tail_reduce() {
    std::vector<FreePolynomial> basis = snapshot();
    const LeadingWordIndex index = build_index(basis);
    for (auto& e : elements_) {
      std::vector<FreePolynomial::Term> rest(e.poly.terms().begin() + 1, e.poly.terms().end());
      const FreePolynomial tail = FreePolynomial::from_sorted_terms(field_, std::move(rest));
      FreePolynomial lead = FreePolynomial::monomial(e.poly.leading_word(), e.poly.leading_coeff());
      e.poly = lead + reduce_against(tail, basis, index);
    }
  }

  void queue_pairs(std::size_t i) {
    const Element& h = elements_[i];
    for (const auto& g : elements_) {
      const FreeWord& u = g.poly.leading_word();
      const FreeWord& v = h.poly.leading_word();
      for (const auto& amb : proper_overlaps(u, v))
        pending_.insert(Pair{u.size() + v.size() - amb.overlap, u + amb.c, g.id, h.id, amb.overlap});
      if (g.id == h.id) continue;
      for (const auto& amb : proper_overlaps(v, u))
        pending_.insert(Pair{u.size() + v.size() - amb.overlap, v + amb.c, h.id, g.id, amb.overlap});
    }
  }

  FieldSpec field_;
  std::size_t rank_;
  std::size_t cap_;
  unsigned threads_;
  std::vector<Element> elements_;
  std::unordered_map<std::size_t, std::size_t> slot_;
  std::set<Pair> pending_;
  std::size_t next_id_ = 0;
  std::size_t discarded_ = 0;
  CompletionStats stats_;
};

}  // namespace detail

/// Buchberger completion with a weight cap. Overlaps heavier than
/// `max_weight` are discarded and counted.
inline GroebnerState complete(const RelationSet& rs, const MonomialOrder& order, std::size_t max_weight,
                              unsigned threads = 1) {
  if (order.letters() != 2 * rs.rank)
    throw std::invalid_argument("monomial order does not match the algebra rank");
  if (rs.max_weight() > max_weight) throw CapTooSmall(static_cast<int>(max_weight), static_cast<int>(rs.max_weight()));
  std::vector<FreePolynomial> initial;
  for (const auto& r : rs.relations)
    if (!r.poly.is_zero()) initial.push_back(order.to_internal(r.poly));
  const bool homogeneous = rs.is_homogeneous();

  detail::Completion engine(rs.field, rs.rank, max_weight, threads);
  engine.run(std::move(initial));

  GroebnerState st(rs.field, rs.rank, order);
  st.set_basis(engine.sorted_basis());
  const bool complete = engine.discarded() == 0;
  // Homogeneous input: every overlap up to the cap was resolved. Otherwise a
  // discarded overlap may still produce light elements, so nothing is
  // certified unless completion finished.
  std::size_t below = max_weight + 1;
  if (!complete && !homogeneous) below = 0;
  st.set_certificate(max_weight, below, complete, homogeneous, engine.discarded());
  st.set_stats(engine.stats());
  return st;
}

/// Normal words of one weight, in descending monomial order.
inline std::vector<FreeWord> normal_monomials(const GroebnerState& st, std::size_t weight) {
  if (!st.certified(weight))
    throw NotCertified("weight " + std::to_string(weight) + " is not below " + std::to_string(st.complete_below()));
  std::vector<FreeWord> out;
  const LeadingWordIndex& idx = st.index();
  const std::size_t alphabet = 2 * st.rank();
  std::string current;
  // Depth-first over the automaton; states that complete a leading word are
  // pruned, so only normal prefixes are ever extended.
  auto walk = [&](auto&& self, std::size_t state) -> void {
    if (current.size() == weight) {
      out.push_back(st.order().to_external(FreeWord(current)));
      return;
    }
    for (std::size_t c = 0; c < alphabet; ++c) {
      const std::size_t next = idx.states() ? idx.next(state, static_cast<char>(c)) : 0;
      if (idx.states() && idx.is_match(next)) continue;
      current.push_back(static_cast<char>(c));
      self(self, next);
      current.pop_back();
    }
  };
  walk(walk, 0);
  std::sort(out.begin(), out.end(), [&](const FreeWord& a, const FreeWord& b) { return st.order().compare(a, b) > 0; });
  return out;
}

/// Number of normal words of each weight 0..max_weight, by dynamic
/// programming over automaton states. Ignores certification.
inline std::vector<mpz_class> count_normal_words(const GroebnerState& st, std::size_t max_weight) {
  const LeadingWordIndex& idx = st.index();
  const std::size_t alphabet = 2 * st.rank();
  const std::size_t states = std::max<std::size_t>(idx.states(), 1);
  std::vector<mpz_class> layer(states, 0), counts;
  if (idx.states() && idx.is_match(0)) return std::vector<mpz_class>(max_weight + 1, 0);
  layer[0] = 1;
  for (std::size_t w = 0;; ++w) {
    mpz_class total = 0;
    for (const auto& x : layer) total += x;
    counts.push_back(total);
    if (w == max_weight) break;
    std::vector<mpz_class> next(states, 0);
    for (std::size_t s = 0; s < states; ++s) {
      if (layer[s] == 0) continue;
      for (std::size_t c = 0; c < alphabet; ++c) {
        const std::size_t t = idx.states() ? idx.next(s, static_cast<char>(c)) : 0;
        if (idx.states() && idx.is_match(t)) continue;
        next[t] += layer[s];
      }
    }
    layer = std::move(next);
  }
  return counts;
}

struct PoincareSeries {
  std::vector<mpz_class> counts;                // weights 0..w_max
  std::optional<std::size_t> finite_certificate;  // first weight with count 0
  std::size_t truncated_at = 0;                 // last weight computed
  std::size_t certified_below = 0;

  mpz_class total() const {
    mpz_class t = 0;
    for (const auto& c : counts) t += c;
    return t;
  }

  /// "1 + 4t + 5t^2"
  std::string polynomial_string() const {
    std::string out;
    for (std::size_t k = 0; k < counts.size(); ++k) {
      if (counts[k] == 0) continue;
      if (!out.empty()) out += " + ";
      if (k == 0) {
        out += counts[k].get_str();
        continue;
      }
      if (counts[k] != 1) out += counts[k].get_str();
      out += k == 1 ? "t" : "t^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
  }

  std::string certificate_string() const {
    if (finite_certificate) {
      const std::size_t top = *finite_certificate == 0 ? 0 : *finite_certificate - 1;
      return *finite_certificate == 0 ? "finite-dimensional: zero algebra"
                                      : "finite-dimensional: max weight " + std::to_string(top);
    }
    return "truncated at weight " + std::to_string(truncated_at) + ", certified below " +
           std::to_string(certified_below);
  }
};

inline PoincareSeries poincare(const GroebnerState& st) {
  if (!st.is_complete() && st.complete_below() == 0)
    throw NotCertified("no weight is certified");
  const std::size_t limit = st.is_complete() ? st.truncation_weight().value_or(0) : st.complete_below() - 1;
  const auto counts = count_normal_words(st, limit + 1);
  PoincareSeries out;
  out.certified_below = st.complete_below();
  for (std::size_t w = 0; w <= limit; ++w) {
    if (counts[w] == 0) {
      // Every longer word contains a weight-w word, so all higher counts vanish.
      if (counts[w + 1] != 0) throw std::logic_error("normal word count rose after reaching zero");
      out.finite_certificate = w;
      out.truncated_at = w;
      return out;
    }
    out.counts.push_back(counts[w]);
  }
  out.truncated_at = limit;
  return out;
}

/// Independent check that every overlap of the basis reduces to zero and
/// that no leading word divides another.
inline bool verify_groebner(const GroebnerState& st) {
  const auto& basis = st.internal_basis();
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i != j && basis[j].leading_word().divides(basis[i].leading_word())) return false;
      for (const auto& amb : detail::proper_overlaps(basis[i].leading_word(), basis[j].leading_word())) {
        const FreePolynomial d = basis[i].sandwich(FreeWord(), amb.c) - basis[j].sandwich(amb.a, FreeWord());
        if (!detail::reduce_against(d, basis, st.index()).is_zero()) return false;
      }
    }
  return true;
}

}  // namespace beck

#endif  // BECK_GROEBNER_HPP
