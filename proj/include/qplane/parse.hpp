#pragma once

/// Expression parsing and canonical text printing for the four algebras
/// (plane, H, F, forms). Grammar:
///   expr   := ('+'|'-')? term (('+'|'-') term)*
///   term   := factor ('*'? factor)*
///   factor := atom ('^' uint)? | '(' expr ')' ('^' uint)? | rational
/// Juxtaposition is multiplication and order-sensitive. Each expression
/// must draw its atoms from a single algebra; q and literals are common.

#include <qplane/dual.hpp>
#include <qplane/plane.hpp>
#include <qplane/wess_zumino.hpp>

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qplane {

enum class Algebra { plane, hopf, dual, wz };

inline const char* algebra_name(Algebra a) {
    switch (a) {
        case Algebra::plane: return "plane";
        case Algebra::hopf: return "hopf";
        case Algebra::dual: return "dual";
        case Algebra::wz: return "wz";
    }
    return "?";
}

/// Raised for malformed input and for atoms of the wrong algebra; `offset`
/// is the byte position in the input where the problem starts.
class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t offset, const std::string& msg)
        : std::runtime_error(msg + " (at byte " + std::to_string(offset) +
                             ")"),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

  private:
    std::size_t offset_;
};

namespace detail {

struct Token {
    enum Kind { kAtom, kNumber, kPlus, kMinus, kStar, kCaret, kLParen,
                kRParen, kEnd };
    Kind kind;
    std::string text;
    std::size_t offset;
};

inline std::vector<Token> lex(const std::string& in) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < in.size()) {
        char ch = in[i];
        if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (ch >= '0' && ch <= '9') {
            std::size_t j = i;
            while (j < in.size() && in[j] >= '0' && in[j] <= '9') ++j;
            if (j < in.size() && in[j] == '/' && j + 1 < in.size() &&
                in[j + 1] >= '0' && in[j + 1] <= '9') {
                ++j;
                while (j < in.size() && in[j] >= '0' && in[j] <= '9') ++j;
            }
            out.push_back({Token::kNumber, in.substr(i, j - i), start});
            i = j;
            continue;
        }
        switch (ch) {
            case '+': out.push_back({Token::kPlus, "+", start}); ++i; continue;
            case '-': out.push_back({Token::kMinus, "-", start}); ++i; continue;
            case '*': out.push_back({Token::kStar, "*", start}); ++i; continue;
            case '^': out.push_back({Token::kCaret, "^", start}); ++i; continue;
            case '(': out.push_back({Token::kLParen, "(", start}); ++i; continue;
            case ')': out.push_back({Token::kRParen, ")", start}); ++i; continue;
            default: break;
        }
        // atoms: dx, dy, X+, X- are two characters; everything else is one
        if (ch == 'd' && i + 1 < in.size() &&
            (in[i + 1] == 'x' || in[i + 1] == 'y')) {
            out.push_back({Token::kAtom, in.substr(i, 2), start});
            i += 2;
            continue;
        }
        if (ch == 'X') {
            if (i + 1 < in.size() && (in[i + 1] == '+' || in[i + 1] == '-')) {
                out.push_back({Token::kAtom, in.substr(i, 2), start});
                i += 2;
                continue;
            }
            throw ParseError(start, "expected 'X+' or 'X-'");
        }
        static const std::string letters = "xyabcdqK";
        if (letters.find(ch) != std::string::npos) {
            out.push_back({Token::kAtom, std::string(1, ch), start});
            ++i;
            continue;
        }
        throw ParseError(start, std::string("unexpected character '") + ch +
                                    "'");
    }
    out.push_back({Token::kEnd, "", in.size()});
    return out;
}

}  // namespace detail

/// Abstract syntax tree node; atoms are still untyped strings here, the
/// algebra check happens at evaluation.
struct Expr {
    enum Kind { kNum, kAtom, kNeg, kAdd, kSub, kMul, kPow };
    Kind kind;
    Rational num;             // kNum
    std::string atom;         // kAtom
    std::size_t offset = 0;   // for error reporting on atoms
    long exponent = 0;        // kPow
    std::unique_ptr<Expr> lhs, rhs;
};

namespace detail {

class Parser {
  public:
    explicit Parser(const std::string& input) : toks_(lex(input)) {}

    std::unique_ptr<Expr> parse() {
        std::unique_ptr<Expr> e = parse_expr();
        if (cur().kind != Token::kEnd)
            throw ParseError(cur().offset, "unexpected trailing input");
        return e;
    }

  private:
    const Token& cur() const { return toks_[pos_]; }
    void advance() { ++pos_; }

    std::unique_ptr<Expr> parse_expr() {
        std::unique_ptr<Expr> lhs;
        if (cur().kind == Token::kMinus || cur().kind == Token::kPlus) {
            bool neg = cur().kind == Token::kMinus;
            advance();
            lhs = parse_term();
            if (neg) {
                auto n = std::make_unique<Expr>();
                n->kind = Expr::kNeg;
                n->lhs = std::move(lhs);
                lhs = std::move(n);
            }
        } else {
            lhs = parse_term();
        }
        while (cur().kind == Token::kPlus || cur().kind == Token::kMinus) {
            bool sub = cur().kind == Token::kMinus;
            advance();
            auto node = std::make_unique<Expr>();
            node->kind = sub ? Expr::kSub : Expr::kAdd;
            node->lhs = std::move(lhs);
            node->rhs = parse_term();
            lhs = std::move(node);
        }
        return lhs;
    }

    std::unique_ptr<Expr> parse_term() {
        std::unique_ptr<Expr> lhs = parse_factor();
        for (;;) {
            if (cur().kind == Token::kStar) {
                advance();
            } else if (cur().kind != Token::kAtom &&
                       cur().kind != Token::kNumber &&
                       cur().kind != Token::kLParen) {
                break;
            }
            auto node = std::make_unique<Expr>();
            node->kind = Expr::kMul;
            node->lhs = std::move(lhs);
            node->rhs = parse_factor();
            lhs = std::move(node);
        }
        return lhs;
    }

    std::unique_ptr<Expr> parse_factor() {
        std::unique_ptr<Expr> base;
        if (cur().kind == Token::kNumber) {
            base = std::make_unique<Expr>();
            base->kind = Expr::kNum;
            base->num = rational_from_string(cur().text);
            base->offset = cur().offset;
            advance();
        } else if (cur().kind == Token::kAtom) {
            base = std::make_unique<Expr>();
            base->kind = Expr::kAtom;
            base->atom = cur().text;
            base->offset = cur().offset;
            advance();
        } else if (cur().kind == Token::kLParen) {
            advance();
            base = parse_expr();
            if (cur().kind != Token::kRParen)
                throw ParseError(cur().offset, "expected ')'");
            advance();
        } else {
            throw ParseError(cur().offset, "expected an atom, a number or '('");
        }
        if (cur().kind == Token::kCaret) {
            advance();
            if (cur().kind != Token::kNumber ||
                cur().text.find('/') != std::string::npos)
                throw ParseError(cur().offset,
                                 "exponent must be a nonnegative integer");
            auto node = std::make_unique<Expr>();
            node->kind = Expr::kPow;
            node->exponent = std::stol(cur().text);
            node->lhs = std::move(base);
            advance();
            return node;
        }
        return base;
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

/// All atoms of all algebras, to distinguish "wrong algebra" from "unknown".
inline const std::set<std::string>& all_atoms() {
    static const std::set<std::string> s{"x", "y",  "dx", "dy", "K", "X+",
                                         "X-", "a", "b",  "c",  "d"};
    return s;
}

template <typename T>
struct AlgebraTraits;

template <>
struct AlgebraTraits<PlaneElement> {
    static constexpr Algebra algebra = Algebra::plane;
    static PlaneElement one(const CycFieldPtr& f) {
        return PlaneElement::one(f);
    }
    static std::map<std::string, PlaneElement> atoms(const CycFieldPtr& f) {
        return {{"x", PlaneElement::x(f)}, {"y", PlaneElement::y(f)}};
    }
};

template <>
struct AlgebraTraits<HElement> {
    static constexpr Algebra algebra = Algebra::hopf;
    static HElement one(const CycFieldPtr& f) { return HElement::one(f); }
    static std::map<std::string, HElement> atoms(const CycFieldPtr& f) {
        return {{"K", HElement::k(f)},
                {"X+", HElement::x_plus(f)},
                {"X-", HElement::x_minus(f)}};
    }
};

template <>
struct AlgebraTraits<FElement> {
    static constexpr Algebra algebra = Algebra::dual;
    static FElement one(const CycFieldPtr& f) { return FElement::one(f); }
    static std::map<std::string, FElement> atoms(const CycFieldPtr& f) {
        return {{"a", FElement::a(f)},
                {"b", FElement::b(f)},
                {"c", FElement::c(f)},
                // d is accepted on input and eliminated immediately
                {"d", FElement::d(f)}};
    }
};

template <>
struct AlgebraTraits<WZForm> {
    static constexpr Algebra algebra = Algebra::wz;
    static WZForm one(const CycFieldPtr& f) {
        return WZForm::from_plane(PlaneElement::one(f));
    }
    static std::map<std::string, WZForm> atoms(const CycFieldPtr& f) {
        return {{"x", WZForm::from_plane(PlaneElement::x(f))},
                {"y", WZForm::from_plane(PlaneElement::y(f))},
                {"dx", WZForm::dx(f)},
                {"dy", WZForm::dy(f)}};
    }
};

template <typename T>
T eval_expr(const Expr& e, const CycFieldPtr& field,
            const std::map<std::string, T>& atoms) {
    using Traits = AlgebraTraits<T>;
    switch (e.kind) {
        case Expr::kNum:
            return field->from_rational(e.num) * Traits::one(field);
        case Expr::kAtom: {
            if (e.atom == "q") return field->q() * Traits::one(field);
            auto it = atoms.find(e.atom);
            if (it != atoms.end()) return it->second;
            if (all_atoms().count(e.atom))
                throw ParseError(
                    e.offset, "atom '" + e.atom + "' does not belong to the " +
                                  algebra_name(Traits::algebra) + " algebra");
            throw ParseError(e.offset, "unknown atom '" + e.atom + "'");
        }
        case Expr::kNeg:
            return -eval_expr(*e.lhs, field, atoms);
        case Expr::kAdd:
            return eval_expr(*e.lhs, field, atoms) +
                   eval_expr(*e.rhs, field, atoms);
        case Expr::kSub:
            return eval_expr(*e.lhs, field, atoms) -
                   eval_expr(*e.rhs, field, atoms);
        case Expr::kMul:
            return eval_expr(*e.lhs, field, atoms) *
                   eval_expr(*e.rhs, field, atoms);
        case Expr::kPow: {
            T base = eval_expr(*e.lhs, field, atoms);
            T acc = Traits::one(field);
            for (long i = 0; i < e.exponent; ++i) acc = acc * base;
            return acc;
        }
    }
    throw std::logic_error("unreachable expression kind");
}

template <typename T>
T parse_as(const CycFieldPtr& field, const std::string& input) {
    Parser p(input);
    std::unique_ptr<Expr> ast = p.parse();
    return eval_expr<T>(*ast, field, AlgebraTraits<T>::atoms(field));
}

}  // namespace detail

inline std::unique_ptr<Expr> parse_expression(const std::string& input) {
    return detail::Parser(input).parse();
}

inline PlaneElement parse_plane(const CycFieldPtr& f, const std::string& in) {
    return detail::parse_as<PlaneElement>(f, in);
}
inline HElement parse_hopf(const CycFieldPtr& f, const std::string& in) {
    return detail::parse_as<HElement>(f, in);
}
inline FElement parse_dual(const CycFieldPtr& f, const std::string& in) {
    return detail::parse_as<FElement>(f, in);
}
inline WZForm parse_wz(const CycFieldPtr& f, const std::string& in) {
    return detail::parse_as<WZForm>(f, in);
}

// ---------------------------------------------------------------------------
// Canonical printing. Terms appear in lexicographic order of their exponent
// tuples, coefficient first; parse(to_text(e)) == e always.

namespace detail {

/// True when the scalar prints as more than one q-monomial and therefore
/// needs parentheses inside a product.
inline bool scalar_is_multiterm(const CycScalar& s) {
    int nz = 0;
    for (const auto& c : s.coeffs())
        if (c != 0) ++nz;
    return nz > 1;
}

/// True when the leading printed sign would be '-'.
inline bool scalar_prints_negative(const CycScalar& s) {
    for (const auto& c : s.coeffs())
        if (c != 0) return c < 0;
    return false;
}

/// One printed term: sign split out so terms join with " + " / " - ".
struct PrintedTerm {
    bool negative;
    std::string body;
};

inline PrintedTerm printed_term(const CycScalar& coeff,
                                const std::string& mono) {
    PrintedTerm t{scalar_prints_negative(coeff), ""};
    CycScalar mag = t.negative ? -coeff : coeff;
    std::string cs = mag.str();
    if (scalar_is_multiterm(mag)) cs = "(" + cs + ")";
    if (mono.empty())
        t.body = cs;
    else if (cs == "1")
        t.body = mono;
    else
        t.body = cs + " * " + mono;
    return t;
}

inline std::string join_terms(const std::vector<PrintedTerm>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i == 0)
            out += terms[i].negative ? "-" : "";
        else
            out += terms[i].negative ? " - " : " + ";
        out += terms[i].body;
    }
    return out;
}

inline void append_power(std::string& out, const char* name, int e) {
    if (e == 0) return;
    if (!out.empty()) out += " ";
    out += name;
    if (e > 1) out += "^" + std::to_string(e);
}

}  // namespace detail

inline std::string to_text(const CycScalar& s) { return s.str(); }

inline std::string to_text(const PlaneElement& u) {
    std::vector<detail::PrintedTerm> terms;
    for (const auto& [k, c] : u.terms()) {
        std::string mono;
        detail::append_power(mono, "x", k.first);
        detail::append_power(mono, "y", k.second);
        terms.push_back(detail::printed_term(c, mono));
    }
    return detail::join_terms(terms);
}

inline std::string to_text(const HElement& u) {
    std::vector<detail::PrintedTerm> terms;
    for (const auto& [k, c] : u.terms()) {
        std::string mono;
        detail::append_power(mono, "K", k[0]);
        detail::append_power(mono, "X+", k[1]);
        detail::append_power(mono, "X-", k[2]);
        terms.push_back(detail::printed_term(c, mono));
    }
    return detail::join_terms(terms);
}

inline std::string to_text(const FElement& u) {
    std::vector<detail::PrintedTerm> terms;
    for (const auto& [k, c] : u.terms()) {
        std::string mono;
        detail::append_power(mono, "a", k[0]);
        detail::append_power(mono, "b", k[1]);
        detail::append_power(mono, "c", k[2]);
        terms.push_back(detail::printed_term(c, mono));
    }
    return detail::join_terms(terms);
}

inline std::string to_text(const WZForm& u) {
    static const char* suffix[4] = {"", "dx", "dy", "dx dy"};
    std::vector<detail::PrintedTerm> terms;
    for (int w = 0; w < 4; ++w) {
        for (const auto& [k, c] :
             u.component(static_cast<WZForm::Word>(w)).terms()) {
            std::string mono;
            detail::append_power(mono, "x", k.first);
            detail::append_power(mono, "y", k.second);
            if (w != WZForm::kOne) {
                if (!mono.empty()) mono += " ";
                mono += suffix[w];
            }
            terms.push_back(detail::printed_term(c, mono));
        }
    }
    return detail::join_terms(terms);
}

}  // namespace qplane
