#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace atomforge {

// A word is a byte string of symbol indices; index order is the shortlex order.
using Word = std::string;

bool shortlex_less(const Word& a, const Word& b);

struct Alphabet {
  std::vector<std::string> names;
  std::vector<int> inverse;

  int size() const { return static_cast<int>(names.size()); }
  std::optional<int> find(std::string_view name) const;
  Word invert(const Word& w) const;

  // Empty word prints as "e".
  std::string format(const Word& w) const;
  // Greedy longest-match tokenization with ( ) grouping and ^n powers.
  Word parse(std::string_view text) const;
};

struct Presentation {
  std::vector<std::string> generators;
  std::vector<std::string> involutions;
  Alphabet alphabet;
  std::vector<Word> relators;
};

Presentation parse_presentation(std::istream& in);
Presentation load_presentation(const std::string& path);

struct CompletionLimits {
  std::size_t max_rules = 20000;
  std::size_t max_word_len = 40;
  // When set, hitting a limit returns the partial system instead of throwing.
  bool allow_partial = false;
  // Coxeter presentations whose completion hits a limit switch to the exact
  // root-system reducer instead of failing.
  bool coxeter_fallback = true;
};

// Exact shortlex normal forms for a Coxeter group through its reflection
// representation: the least left descent is peeled off one letter at a time.
class CoxeterReducer {
 public:
  // m[i][j] is the order of s_i s_j; 0 means infinite.
  explicit CoxeterReducer(std::vector<std::vector<int>> m);

  int rank() const { return n_; }
  // 2 B(alpha_i, alpha_j) for the reflection representation.
  double form(int i, int j) const { return static_cast<double>(form_[i * n_ + j]); }
  Word normal_form(const Word& w) const;
  // True iff ell(w s) < ell(w), for w given in any spelling.
  bool is_right_descent(const Word& w, int s) const;

 private:
  using Matrix = std::vector<long double>;
  void apply_right(Matrix& m, int s) const;
  int least_left_descent(const Matrix& inv) const;

  int n_;
  std::vector<long double> form_;  // 2 B(alpha_i, alpha_j)
};

// Coxeter matrix of p when every generator is an involution and every
// relator has the form (ab)^m; nullopt otherwise.
std::optional<std::vector<std::vector<int>>> coxeter_matrix(const Presentation& p);

struct Rule {
  Word lhs;
  Word rhs;
};

class RewritingSystem {
 public:
  enum class Backend { KnuthBendix, Coxeter };

  RewritingSystem() = default;
  RewritingSystem(Alphabet alphabet, std::vector<Rule> rules, bool complete);
  // Normal forms come from the Coxeter reducer; rules holds the partial
  // completion that was abandoned.
  RewritingSystem(Alphabet alphabet, std::vector<Rule> partial_rules,
                  std::shared_ptr<const CoxeterReducer> coxeter);

  Backend backend() const { return coxeter_ ? Backend::Coxeter : Backend::KnuthBendix; }
  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Rule>& rules() const { return rules_; }
  bool complete() const { return complete_; }
  std::size_t max_lhs() const { return max_lhs_; }
  const CoxeterReducer* coxeter() const { return coxeter_.get(); }

  // On an incomplete system the result is reduced but maybe not canonical;
  // *canonical reports which.
  Word normal_form(const Word& w, bool* canonical = nullptr) const;
  Word multiply(const Word& nf, int symbol) const;

 private:
  void build_automaton();

  Alphabet alphabet_;
  std::vector<Rule> rules_;
  bool complete_ = false;
  std::size_t max_lhs_ = 0;
  std::shared_ptr<const CoxeterReducer> coxeter_;
  // Aho-Corasick automaton over rule left-hand sides.
  std::vector<int32_t> delta_;
  std::vector<int32_t> match_;
};

RewritingSystem complete(const Presentation& p, const CompletionLimits& limits = {});

}  // namespace atomforge
