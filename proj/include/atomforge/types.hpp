#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "atomforge/atoms.hpp"
#include "atomforge/ball.hpp"
#include "atomforge/metrics.hpp"

namespace atomforge {

// x -> word * sym(x): a group element followed by a letter permutation that
// preserves the presentation (identity unless automorphisms are enabled).
struct Isometry {
  Word word;
  int sym = 0;
};

class Symmetries {
 public:
  Symmetries(const Ball& b, bool automorphisms);

  bool available() const { return group_ != nullptr; }
  int automorphism_count() const { return static_cast<int>(perms_.size()); }
  const std::vector<int>& permutation(int sym) const { return perms_[sym]; }

  Isometry compose(const Isometry& a, const Isometry& b) const;  // a after b
  Isometry inverse(const Isometry& a) const;
  // Every isometry carrying vertex x to vertex y.
  std::vector<Isometry> carrying(int x, int y) const;
  // Image of a ball vertex; -1 when it cannot be located inside the ball.
  int act(const Isometry& g, int y) const;
  std::string key(const Isometry& g) const;
  std::string format(const Isometry& g) const;

 private:
  Word image(int sym, const Word& w) const;
  const Word& vertex_word(int y) const;

  const Ball& b_;
  const RewritingSystem* group_ = nullptr;
  std::vector<std::vector<int>> perms_;
  std::vector<std::vector<int>> mul_;
  std::vector<int> inv_;
  std::vector<Word> stabilizer_;
  mutable std::unordered_map<int, Word> words_;
};

struct TypeOptions {
  bool automorphisms = true;  // allow presentation automorphisms in witnesses
  int neighborhood = 3;       // radius around the tip where atom membership is compared
};

struct GeometricWitness {
  int source = -1, target = -1;
  bool found = false;
  bool uncertified = false;  // some candidate left the ball
  Isometry g;                // group witness
  std::vector<std::pair<int, int>> map;  // partial isometry on unframed balls
  std::vector<int> child_map;            // source child index -> target child atom
};

// Searches for an isometry carrying the anchors of atom a onto those of atom c:
// visible points, horofunction offsets, tips, cones and children must match.
GeometricWitness geometric_equivalence(const Ball& b, const AtomTree& t, const Symmetries& s, int a, int c,
                                       const TypeOptions& opt = {});

struct TypeTable {
  std::vector<int> type_of;         // per atom
  std::vector<int> representative;  // per type
  std::vector<std::string> names;
  std::vector<GeometricWitness> witness;  // representative -> atom, per atom
  std::vector<int> new_per_level, cumulative;
  int stabilization_level = -1;  // first level >= 1 that adds no type
  int count() const { return static_cast<int>(representative.size()); }
};

TypeTable classify_types(const Ball& b, const AtomTree& t, const Symmetries& s, const TypeOptions& opt = {});
// Writes the type ids into the tree nodes.
void assign_types(AtomTree& t, const TypeTable& types);

struct RigidStructure {
  std::vector<std::string> symbols;
  std::vector<int> symbol_type;   // type whose representative's children define the symbol
  std::vector<int> symbol_index;  // index among those children
  std::vector<int> symbol_of;     // per atom, -1 for the root
  std::vector<int> rep_child;     // per atom: matching child of the parent type's representative
  std::vector<Isometry> marking;  // per atom, empty on unframed balls
  bool has_markings = false;
  int find_symbol(const std::string& name) const;
};

RigidStructure build_rigid_structure(const Ball& b, const AtomTree& t, const Symmetries& s, const TypeTable& types);

struct TypeAutomaton {
  int initial = 0;
  std::vector<std::string> states;
  std::vector<std::string> symbols;
  struct Edge {
    int from, symbol, to;
  };
  std::vector<Edge> edges;  // sorted by (from, symbol)
  std::vector<bool> open;   // states whose representative has no built children
  // -1 when the symbol is not an out-edge of the state.
  int next(int state, int symbol) const;
};

TypeAutomaton type_automaton(const AtomTree& t, const TypeTable& types, const RigidStructure& rs);
// Closure strategy for infinitude per state: 1 reaches a cycle, 0 cannot,
// -1 depends on a state whose transitions were not built.
std::vector<int> closure_infinite(const TypeAutomaton& a);

struct LambdaTypes {
  int lambda = 0;
  std::vector<int> class_of;  // per atom
  int count = 0;
  std::vector<int> per_level;  // distinct classes per level
};

LambdaTypes lambda_types(const Ball& b, const AtomTree& t, const Symmetries& s, const TypeTable& types,
                         const RigidStructure& rs, const std::vector<std::vector<NearPair>>& deltas, int lambda);

struct GluingAutomaton {
  int lambda = 1;
  int initial = 0;
  struct State {
    int type_a, type_b;
    std::string key;
    int rep_a, rep_b;  // least pair reaching it
    int level;         // level where it first appears
  };
  std::vector<State> states;
  std::vector<std::string> symbols;
  std::vector<std::string> type_names;
  struct Edge {
    int from, s1, s2, to;
  };
  std::vector<Edge> edges;  // sorted by (from, s1, s2)
  std::vector<int> new_per_level;
  bool closed = false;
  int closed_level = -1;
  int levels = 0;     // deepest level whose pairs were used
  int conflicts = 0;  // same-state pairs with different letter sets
  int next(int state, int s1, int s2) const;
};

// Pair states (a,b) ~ (c,d) share types and psi_b^-1 psi_a.
GluingAutomaton gluing_automaton(const Ball& b, const AtomTree& t, const Symmetries& s, const TypeTable& types,
                                 const RigidStructure& rs, const std::vector<std::vector<NearPair>>& deltas,
                                 int lambda);
// Per atom pair in deltas: the state it lands in.
std::map<std::pair<int, int>, int> gluing_states(const Symmetries& s, const AtomTree& t, const TypeTable& types,
                                                 const RigidStructure& rs, const GluingAutomaton& m,
                                                 const std::vector<std::vector<NearPair>>& deltas);

struct Coding {
  std::vector<int> prefix;
  std::vector<int> period;  // empty for a finite prefix
};

// Whitespace separated symbols with an optional trailing "( ... )" period.
Coding parse_coding(const std::vector<std::string>& symbols, const std::string& text);
std::string format_coding(const std::vector<std::string>& symbols, const Coding& c);

struct GluingVerdict {
  bool accepted = false;
  int reject_level = -1;
  bool by_cycle = false;  // acceptance proven by a repeated (state, phase)
  int steps = 0;
};

GluingVerdict run_gluing_query(const GluingAutomaton& m, const TypeAutomaton& types, const Coding& u, const Coding& v);

void write_type_automaton_dot(const TypeAutomaton& a, std::ostream& out);
void write_type_automaton_json(const TypeAutomaton& a, std::ostream& out);
void write_gluing_automaton_dot(const Ball& b, const AtomTree& t, const GluingAutomaton& m, std::ostream& out);
void write_gluing_automaton_json(const Ball& b, const AtomTree& t, const GluingAutomaton& m, const TypeAutomaton& types,
                                 std::ostream& out);

struct AutomataFile {
  TypeAutomaton types;
  GluingAutomaton gluing;
};
AutomataFile read_automata_json(std::istream& in);

}  // namespace atomforge
