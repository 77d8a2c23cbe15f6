// SPDX-License-Identifier: Apache-2.0

#ifndef POINTFREE_MODEL_SEARCH_HPP
#define POINTFREE_MODEL_SEARCH_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pointfree/contact.hpp"
#include "pointfree/errors.hpp"
#include "pointfree/representatives.hpp"

namespace pointfree {

namespace detail {

inline std::vector<std::vector<int>> atom_permutations(int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

inline RegionCode permute_code(RegionCode code, const std::vector<int>& perm) {
    RegionCode out = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        if (code >> i & 1) out |= RegionCode{1} << perm[i];
    return out;
}

} // namespace detail

inline std::string describe_structure(const ContactStructure& cs) {
    const int n = cs.algebra().atom_count();
    switch (cs.kind()) {
        case ContactKind::overlap:
            return "overlap(n=" + std::to_string(n) + ")";
        case ContactKind::d_contact:
            return "d_contact(n=" + std::to_string(n) + ", d=" + cs.distinguished().name() + ")";
        case ContactKind::atom_graph: {
            std::string out = "atom_graph(n=" + std::to_string(n) + ", edges={";
            bool first = true;
            for (auto [i, j] : cs.atom_edges()) {
                if (!first) out += ",";
                out += cs.algebra().atom_labels()[i] + "-" + cs.algebra().atom_labels()[j];
                first = false;
            }
            return out + "})";
        }
        case ContactKind::product:
            return "product(" + describe_structure(cs.left_factor()) + ", " +
                   describe_structure(cs.right_factor()) + ")";
        case ContactKind::full_relation: {
            std::string out = "full(n=" + std::to_string(n) + ", pairs={";
            bool first = true;
            for (RegionCode x = 0; x < cs.universe_size(); ++x)
                for (RegionCode y = x; y < cs.universe_size(); ++y)
                    if (cs.contact_codes(x, y)) {
                        if (!first) out += ",";
                        out += cs.algebra().region_name(x) + "~" + cs.algebra().region_name(y);
                        first = false;
                    }
            return out + "})";
        }
    }
    return "?";
}

inline constexpr int bca_atom_cap = 4;

/// One representative per isomorphism class of reflexive symmetric atom
/// graphs on `atom_count` atoms, each inducing a contact relation that
/// satisfies C0-C4 (verified on every yield). Boolean-algebra
/// automorphisms are exactly atom permutations, so permutation dedupe is
/// full isomorphism dedupe.
inline std::vector<ContactStructure> enumerate_bca(int atom_count) {
    if (atom_count < 1 || atom_count > bca_atom_cap)
        throw capability_error("atom-graph enumeration is bounded by " +
                               std::to_string(bca_atom_cap) + " atoms");
    const int n = atom_count;
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    const auto perms = detail::atom_permutations(n);

    auto edge_bit = [&](int i, int j) {
        if (i > j) std::swap(i, j);
        for (std::size_t s = 0; s < slots.size(); ++s)
            if (slots[s] == std::make_pair(i, j)) return s;
        throw std::logic_error("edge slot lookup");
    };

    std::vector<ContactStructure> out;
    FiniteAlgebra alg(n);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << slots.size()); ++mask) {
        bool canonical = true;
        for (const auto& perm : perms) {
            std::uint32_t permuted = 0;
            for (std::size_t s = 0; s < slots.size(); ++s)
                if (mask >> s & 1)
                    permuted |= std::uint32_t{1} << edge_bit(perm[slots[s].first],
                                                             perm[slots[s].second]);
            if (permuted < mask) {
                canonical = false;
                break;
            }
        }
        if (!canonical) continue;
        std::vector<std::pair<int, int>> edges;
        for (std::size_t s = 0; s < slots.size(); ++s)
            if (mask >> s & 1) edges.push_back(slots[s]);
        ContactStructure cs = ContactStructure::atom_graph(alg, edges);
        for (AxiomId a : {AxiomId::C0, AxiomId::C1, AxiomId::C2, AxiomId::C3, AxiomId::C4})
            if (!axiom_holds(cs, a))
                throw std::logic_error("atom graph failed a contact axiom");
        out.push_back(std::move(cs));
    }
    return out;
}

/// One representative per isomorphism class of weak contact relations on
/// the Boolean algebra with the given universe size (2, 4 or 8). The
/// relation is forced on overlapping pairs by C1-C3; the free choices are
/// the disjoint nonzero pairs, kept only when closed under enlarging
/// either side (the C3 monotonicity closure). Every yield passes C0-C3.
inline std::vector<ContactStructure> enumerate_bwca(int universe_size) {
    int n;
    switch (universe_size) {
        case 2: n = 1; break;
        case 4: n = 2; break;
        case 8: n = 3; break;
        default:
            throw capability_error("weak-contact enumeration supports universe sizes 2, 4, 8");
    }
    FiniteAlgebra alg(n);
    const RegionCode universe = alg.universe_size();
    std::vector<std::pair<RegionCode, RegionCode>> free_pairs;
    for (RegionCode x = 1; x < universe; ++x)
        for (RegionCode y = x + 1; y < universe; ++y)
            if ((x & y) == 0) free_pairs.emplace_back(x, y);
    const auto perms = detail::atom_permutations(n);

    auto pair_index = [&](RegionCode x, RegionCode y) -> std::optional<std::size_t> {
        if (x > y) std::swap(x, y);
        for (std::size_t s = 0; s < free_pairs.size(); ++s)
            if (free_pairs[s] == std::make_pair(x, y)) return s;
        return std::nullopt;
    };

    std::vector<ContactStructure> out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << free_pairs.size()); ++mask) {
        // monotonicity closure: linking (x,y) forces every disjoint
        // enlargement (x', y')
        bool closed = true;
        for (std::size_t s = 0; s < free_pairs.size() && closed; ++s) {
            if (!(mask >> s & 1)) continue;
            auto [x, y] = free_pairs[s];
            for (RegionCode xe = 1; xe < universe && closed; ++xe) {
                if ((xe & x) != x) continue;
                for (RegionCode ye = 1; ye < universe; ++ye) {
                    if ((ye & y) != y || (xe & ye) != 0) continue;
                    auto idx = pair_index(xe, ye);
                    if (idx && !(mask >> *idx & 1)) {
                        closed = false;
                        break;
                    }
                }
            }
        }
        if (!closed) continue;
        bool canonical = true;
        for (const auto& perm : perms) {
            std::uint32_t permuted = 0;
            for (std::size_t s = 0; s < free_pairs.size(); ++s)
                if (mask >> s & 1) {
                    auto idx = pair_index(detail::permute_code(free_pairs[s].first, perm),
                                          detail::permute_code(free_pairs[s].second, perm));
                    permuted |= std::uint32_t{1} << *idx;
                }
            if (permuted < mask) {
                canonical = false;
                break;
            }
        }
        if (!canonical) continue;
        std::vector<std::pair<RegionCode, RegionCode>> pairs;
        for (RegionCode x = 1; x < universe; ++x)
            for (RegionCode y = 1; y < universe; ++y)
                if ((x & y) != 0) pairs.emplace_back(x, y);
        for (std::size_t s = 0; s < free_pairs.size(); ++s)
            if (mask >> s & 1) {
                pairs.emplace_back(free_pairs[s].first, free_pairs[s].second);
                pairs.emplace_back(free_pairs[s].second, free_pairs[s].first);
            }
        ContactStructure cs = ContactStructure::full_relation(alg, pairs);
        for (AxiomId a : {AxiomId::C0, AxiomId::C1, AxiomId::C2, AxiomId::C3})
            if (!axiom_holds(cs, a)) throw std::logic_error("enumerated relation is not a BWCA");
        out.push_back(std::move(cs));
    }
    return out;
}

/// Enumeration request: a model family, a size bound, and a conjunction of
/// axiom truth constraints filtering the stream.
struct EnumerationTask {
    enum class Family { bwca_universe, bca_atom_graph, d_contact };
    Family family = Family::bwca_universe;
    int size = 8; // universe size for bwca_universe, atom count otherwise
    std::vector<std::pair<AxiomId, bool>> constraints;
    bool dedupe = true;
};

inline std::vector<ContactStructure> enumerate_models(const EnumerationTask& task) {
    std::vector<ContactStructure> models;
    switch (task.family) {
        case EnumerationTask::Family::bwca_universe:
            for (int u : {2, 4, 8}) {
                if (u > task.size) break;
                auto batch = enumerate_bwca(u);
                models.insert(models.end(), batch.begin(), batch.end());
            }
            break;
        case EnumerationTask::Family::bca_atom_graph:
            for (int n = 1; n <= task.size; ++n) {
                auto batch = enumerate_bca(n);
                models.insert(models.end(), batch.begin(), batch.end());
            }
            break;
        case EnumerationTask::Family::d_contact:
            for (int n = 1; n <= task.size; ++n) {
                FiniteAlgebra alg(n);
                for (RegionCode d = 1; d < alg.universe_size(); ++d) {
                    if (task.dedupe) {
                        // atom permutations act on d by popcount
                        if (d != (RegionCode{1} << std::popcount(d)) - 1) continue;
                    }
                    models.push_back(ContactStructure::with_distinguished(alg.region(d)));
                }
            }
            break;
    }
    if (!task.constraints.empty()) {
        std::vector<ContactStructure> filtered;
        for (const auto& cs : models) {
            bool keep = true;
            for (auto [axiom, want] : task.constraints)
                if (axiom_holds(cs, axiom) != want) {
                    keep = false;
                    break;
                }
            if (keep) filtered.push_back(cs);
        }
        return filtered;
    }
    return models;
}

// ---------------------------------------------------------------------------
// Property language: quantifier-free formulas over implicitly universally
// quantified region variables, with the named axioms available as atoms.
// ---------------------------------------------------------------------------

/// Parsed property over regions. Grammar, loosest to tightest binding:
///   iff:   a <-> b          imp: a -> b (right associative)
///   or:    a or b, a | b    and: a and b, a & b      not: not a, !a
///   atoms: term REL term | axiom name | ( formula )
///   REL:   = != <= < << C O   (unicode forms accepted)
///   terms: + - (binary), * (meet), unary - (complement), 0, 1, variables
class PropertyExpr {
public:
    static PropertyExpr parse(std::string_view text) {
        Parser p{text, 0};
        PropertyExpr out;
        out.root_ = p.parse_formula(out.vars_);
        p.skip_ws();
        if (p.pos != text.size()) throw parse_error("trailing input in property", p.pos);
        return out;
    }

    const std::vector<std::string>& variables() const { return vars_; }

    /// Evaluates the quantifier-free body at one binding. Axiom atoms are
    /// looked up in `axiom_values`, computed once per model.
    bool eval(const ContactStructure& cs, std::span<const RegionCode> binding,
              const std::map<AxiomId, bool>& axiom_values) const {
        return eval_node(*root_, cs, binding, axiom_values);
    }

    std::map<AxiomId, bool> axiom_values(const ContactStructure& cs) const {
        std::map<AxiomId, bool> out;
        collect_axioms(*root_, cs, out);
        return out;
    }

    /// First binding refuting the universally quantified property, if any.
    std::optional<std::vector<RegionCode>> find_countermodel_binding(
        const ContactStructure& cs) const {
        const auto axioms = axiom_values(cs);
        const RegionCode universe = cs.universe_size();
        const std::size_t k = vars_.size();
        std::vector<RegionCode> binding(k, 0);
        while (true) {
            if (!eval(cs, binding, axioms)) return binding;
            std::size_t i = k;
            while (i > 0) {
                if (++binding[i - 1] < universe) break;
                binding[i - 1] = 0;
                --i;
            }
            if (i == 0) return std::nullopt;
        }
    }

private:
    enum class NodeKind { and_, or_, imp, iff, not_, axiom, compare };
    enum class Rel { eq, neq, leq, lt, ll, contact, overlap };
    enum class TermKind { var, zero, one, meet, join, minus, complement };

    struct Term {
        TermKind kind;
        int var = -1;
        std::unique_ptr<Term> a, b;
    };
    struct Node {
        NodeKind kind;
        AxiomId axiom = AxiomId::C0;
        Rel rel = Rel::eq;
        std::unique_ptr<Node> a, b;
        std::unique_ptr<Term> ta, tb;
    };

    static RegionCode eval_term(const Term& t, const ContactStructure& cs,
                                std::span<const RegionCode> binding) {
        const RegionCode one = cs.universe_size() - 1;
        switch (t.kind) {
            case TermKind::var: return binding[t.var];
            case TermKind::zero: return 0;
            case TermKind::one: return one;
            case TermKind::meet:
                return eval_term(*t.a, cs, binding) & eval_term(*t.b, cs, binding);
            case TermKind::join:
                return eval_term(*t.a, cs, binding) | eval_term(*t.b, cs, binding);
            case TermKind::minus:
                return eval_term(*t.a, cs, binding) & ~eval_term(*t.b, cs, binding) & one;
            case TermKind::complement: return ~eval_term(*t.a, cs, binding) & one;
        }
        throw std::logic_error("term kind");
    }

    static bool eval_node(const Node& n, const ContactStructure& cs,
                          std::span<const RegionCode> binding,
                          const std::map<AxiomId, bool>& axioms) {
        switch (n.kind) {
            case NodeKind::and_:
                return eval_node(*n.a, cs, binding, axioms) &&
                       eval_node(*n.b, cs, binding, axioms);
            case NodeKind::or_:
                return eval_node(*n.a, cs, binding, axioms) ||
                       eval_node(*n.b, cs, binding, axioms);
            case NodeKind::imp:
                return !eval_node(*n.a, cs, binding, axioms) ||
                       eval_node(*n.b, cs, binding, axioms);
            case NodeKind::iff:
                return eval_node(*n.a, cs, binding, axioms) ==
                       eval_node(*n.b, cs, binding, axioms);
            case NodeKind::not_: return !eval_node(*n.a, cs, binding, axioms);
            case NodeKind::axiom: return axioms.at(n.axiom);
            case NodeKind::compare: {
                const RegionCode x = eval_term(*n.ta, cs, binding);
                const RegionCode y = eval_term(*n.tb, cs, binding);
                switch (n.rel) {
                    case Rel::eq: return x == y;
                    case Rel::neq: return x != y;
                    case Rel::leq: return (x & y) == x;
                    case Rel::lt: return (x & y) == x && x != y;
                    case Rel::ll: return cs.ll_codes(x, y);
                    case Rel::contact: return cs.contact_codes(x, y);
                    case Rel::overlap: return (x & y) != 0;
                }
            }
        }
        throw std::logic_error("node kind");
    }

    static void collect_axioms(const Node& n, const ContactStructure& cs,
                               std::map<AxiomId, bool>& out) {
        switch (n.kind) {
            case NodeKind::axiom:
                if (!out.count(n.axiom)) out[n.axiom] = check_axiom(cs, n.axiom).holds;
                return;
            case NodeKind::not_: collect_axioms(*n.a, cs, out); return;
            case NodeKind::compare: return;
            default:
                collect_axioms(*n.a, cs, out);
                collect_axioms(*n.b, cs, out);
                return;
        }
    }

    struct Parser {
        std::string_view text;
        std::size_t pos;

        void skip_ws() {
            while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
        }
        bool eat(std::string_view tok) {
            skip_ws();
            if (text.substr(pos, tok.size()) == tok) {
                pos += tok.size();
                return true;
            }
            return false;
        }
        bool peek_word(std::string_view word) {
            skip_ws();
            if (text.substr(pos, word.size()) != word) return false;
            const std::size_t after = pos + word.size();
            if (after < text.size() &&
                (std::isalnum(static_cast<unsigned char>(text[after])) || text[after] == '_'))
                return false;
            return true;
        }
        bool eat_word(std::string_view word) {
            if (!peek_word(word)) return false;
            pos += word.size();
            return true;
        }
        std::string identifier() {
            skip_ws();
            std::size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            if (pos == start) throw parse_error("expected an identifier", pos);
            return std::string(text.substr(start, pos - start));
        }

        std::unique_ptr<Node> parse_formula(std::vector<std::string>& vars) {
            auto a = parse_imp(vars);
            skip_ws();
            while (eat("<->") || eat("↔")) {
                auto n = std::make_unique<Node>();
                n->kind = NodeKind::iff;
                n->a = std::move(a);
                n->b = parse_imp(vars);
                a = std::move(n);
                skip_ws();
            }
            return a;
        }
        std::unique_ptr<Node> parse_imp(std::vector<std::string>& vars) {
            auto a = parse_or(vars);
            skip_ws();
            if (eat("->") || eat("→")) {
                auto n = std::make_unique<Node>();
                n->kind = NodeKind::imp;
                n->a = std::move(a);
                n->b = parse_imp(vars); // right associative
                return n;
            }
            return a;
        }
        std::unique_ptr<Node> parse_or(std::vector<std::string>& vars) {
            auto a = parse_and(vars);
            while (true) {
                skip_ws();
                if (eat("∨") || eat("|") || eat_word("or")) {
                    auto n = std::make_unique<Node>();
                    n->kind = NodeKind::or_;
                    n->a = std::move(a);
                    n->b = parse_and(vars);
                    a = std::move(n);
                } else {
                    return a;
                }
            }
        }
        std::unique_ptr<Node> parse_and(std::vector<std::string>& vars) {
            auto a = parse_not(vars);
            while (true) {
                skip_ws();
                if (eat("∧") || eat("&") || eat_word("and")) {
                    auto n = std::make_unique<Node>();
                    n->kind = NodeKind::and_;
                    n->a = std::move(a);
                    n->b = parse_not(vars);
                    a = std::move(n);
                } else {
                    return a;
                }
            }
        }
        std::unique_ptr<Node> parse_not(std::vector<std::string>& vars) {
            skip_ws();
            if (eat("!") || eat("¬") || eat_word("not")) {
                auto n = std::make_unique<Node>();
                n->kind = NodeKind::not_;
                n->a = parse_not(vars);
                return n;
            }
            return parse_atom(vars);
        }

        std::unique_ptr<Node> parse_atom(std::vector<std::string>& vars) {
            skip_ws();
            if (pos >= text.size()) throw parse_error("unexpected end of property", pos);
            // parenthesized formula vs parenthesized term: try formula
            // first, fall back to a comparison starting with '('
            if (text[pos] == '(') {
                const std::size_t saved = pos;
                const std::vector<std::string> saved_vars = vars;
                ++pos;
                try {
                    auto inner = parse_formula(vars);
                    skip_ws();
                    if (pos < text.size() && text[pos] == ')') {
                        ++pos;
                        skip_ws();
                        // a relation after the closing paren means this was
                        // a term after all
                        if (!starts_relation()) return inner;
                    }
                } catch (const parse_error&) {
                }
                pos = saved;
                vars = saved_vars;
                return parse_comparison(vars);
            }
            // axiom atom?
            {
                const std::size_t saved = pos;
                skip_ws();
                if (pos < text.size() &&
                    std::isalpha(static_cast<unsigned char>(text[pos]))) {
                    std::size_t look = pos;
                    while (look < text.size() &&
                           (std::isalnum(static_cast<unsigned char>(text[look])) ||
                            text[look] == '_'))
                        ++look;
                    std::string word(text.substr(pos, look - pos));
                    if (auto ax = axiom_from_name(word)) {
                        pos = look;
                        skip_ws();
                        if (!starts_relation()) {
                            auto n = std::make_unique<Node>();
                            n->kind = NodeKind::axiom;
                            n->axiom = *ax;
                            return n;
                        }
                    }
                    pos = saved;
                }
            }
            return parse_comparison(vars);
        }

        bool starts_relation() {
            skip_ws();
            for (std::string_view r :
                 {"<<", "<=", "<", "!=", "=", "≪", "≤", "≠", "∘"})
                if (text.substr(pos, r.size()) == r) return true;
            if (peek_word("C") || peek_word("O") || peek_word("o")) return true;
            return false;
        }

        std::unique_ptr<Node> parse_comparison(std::vector<std::string>& vars) {
            auto n = std::make_unique<Node>();
            n->kind = NodeKind::compare;
            n->ta = parse_term(vars);
            skip_ws();
            if (eat("<<") || eat("≪"))
                n->rel = Rel::ll;
            else if (eat("<=") || eat("≤"))
                n->rel = Rel::leq;
            else if (eat("!=") || eat("≠"))
                n->rel = Rel::neq;
            else if (eat("<"))
                n->rel = Rel::lt;
            else if (eat("="))
                n->rel = Rel::eq;
            else if (eat("∘") || eat_word("O") || eat_word("o"))
                n->rel = Rel::overlap;
            else if (eat_word("C"))
                n->rel = Rel::contact;
            else
                throw parse_error("expected a relation symbol", pos);
            n->tb = parse_term(vars);
            return n;
        }

        std::unique_ptr<Term> parse_term(std::vector<std::string>& vars) {
            auto a = parse_product(vars);
            while (true) {
                skip_ws();
                if (eat("+")) {
                    auto t = std::make_unique<Term>();
                    t->kind = TermKind::join;
                    t->a = std::move(a);
                    t->b = parse_product(vars);
                    a = std::move(t);
                } else if (pos < text.size() && text[pos] == '-' &&
                           text.substr(pos, 2) != "->") {
                    ++pos;
                    auto t = std::make_unique<Term>();
                    t->kind = TermKind::minus;
                    t->a = std::move(a);
                    t->b = parse_product(vars);
                    a = std::move(t);
                } else {
                    return a;
                }
            }
        }
        std::unique_ptr<Term> parse_product(std::vector<std::string>& vars) {
            auto a = parse_unary(vars);
            while (true) {
                skip_ws();
                if (eat("*") || eat("·") || eat(".")) {
                    auto t = std::make_unique<Term>();
                    t->kind = TermKind::meet;
                    t->a = std::move(a);
                    t->b = parse_unary(vars);
                    a = std::move(t);
                } else {
                    return a;
                }
            }
        }
        std::unique_ptr<Term> parse_unary(std::vector<std::string>& vars) {
            skip_ws();
            if (pos < text.size() && text[pos] == '-' && text.substr(pos, 2) != "->") {
                ++pos;
                auto t = std::make_unique<Term>();
                t->kind = TermKind::complement;
                t->a = parse_unary(vars);
                return t;
            }
            if (eat("(")) {
                auto t = parse_term(vars);
                if (!eat(")")) throw parse_error("expected ')'", pos);
                return t;
            }
            skip_ws();
            if (pos < text.size() && text[pos] == '0') {
                ++pos;
                auto t = std::make_unique<Term>();
                t->kind = TermKind::zero;
                return t;
            }
            if (pos < text.size() && text[pos] == '1') {
                ++pos;
                auto t = std::make_unique<Term>();
                t->kind = TermKind::one;
                return t;
            }
            const std::size_t at = pos;
            std::string name = identifier();
            if (axiom_from_name(name))
                throw parse_error("axiom name \"" + name + "\" used as a region term", at);
            auto t = std::make_unique<Term>();
            t->kind = TermKind::var;
            for (std::size_t i = 0; i < vars.size(); ++i)
                if (vars[i] == name) t->var = static_cast<int>(i);
            if (t->var < 0) {
                vars.push_back(name);
                t->var = static_cast<int>(vars.size()) - 1;
            }
            return t;
        }
    };

    std::shared_ptr<const Node> root_;
    std::vector<std::string> vars_;
};

/// Outcome of a property search or a suite entry.
struct SearchOutcome {
    enum class Status { theorem_confirmed, countermodel_found, inconclusive };
    std::string property;
    Status status = Status::inconclusive;
    std::optional<ContactStructure> model;
    std::string model_summary;
    std::vector<std::string> witness;
    std::string note;
};

inline const char* status_name(SearchOutcome::Status s) {
    switch (s) {
        case SearchOutcome::Status::theorem_confirmed: return "theorem-confirmed";
        case SearchOutcome::Status::countermodel_found: return "countermodel-found";
        case SearchOutcome::Status::inconclusive: return "inconclusive";
    }
    return "?";
}

/// Exhaustive first-countermodel search for a property over an enumerated
/// model family. Found countermodels are re-validated by re-evaluating the
/// property on the stored model before being reported.
inline SearchOutcome search_countermodel(const std::string& property,
                                         const EnumerationTask& task) {
    PropertyExpr expr = PropertyExpr::parse(property);
    SearchOutcome out;
    out.property = property;
    for (const ContactStructure& cs : enumerate_models(task)) {
        auto binding = expr.find_countermodel_binding(cs);
        if (!binding) continue;
        // re-validate on the stored model
        const auto axioms = expr.axiom_values(cs);
        if (expr.eval(cs, *binding, axioms))
            throw std::logic_error("countermodel failed re-validation");
        out.status = SearchOutcome::Status::countermodel_found;
        out.model = cs;
        out.model_summary = describe_structure(cs);
        for (std::size_t i = 0; i < binding->size(); ++i)
            out.witness.push_back(expr.variables()[i] + "=" +
                                  cs.algebra().region_name((*binding)[i]));
        out.note = "first countermodel in canonical enumeration order";
        return out;
    }
    out.status = SearchOutcome::Status::theorem_confirmed;
    out.note = "no countermodel in the enumerated range";
    return out;
}

std::vector<SearchOutcome> run_paper_suite();

} // namespace pointfree

#include "pointfree/paper_suite.hpp"

#endif
