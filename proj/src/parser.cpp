#include "cyclo/parser.hpp"

#include <cctype>
#include <memory>

namespace cyclo {

namespace {

enum class Tok { Int, Zeta, Xi, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    BigInt value;  // Int only
    std::size_t offset;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return cur_; }

    Token take() {
        Token t = cur_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        cur_.offset = pos_;
        if (pos_ >= src_.size()) {
            cur_.kind = Tok::End;
            return;
        }
        char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            cur_.kind = Tok::Int;
            cur_.value = BigInt(std::string(src_.substr(start, pos_ - start)), 10);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            auto word = src_.substr(start, pos_ - start);
            if (word == "zeta") {
                cur_.kind = Tok::Zeta;
            } else if (word == "xi") {
                cur_.kind = Tok::Xi;
            } else {
                throw parse_error(start, "'zeta' or 'xi'", "unknown identifier '" + std::string(word) + "'");
            }
            return;
        }
        ++pos_;
        switch (c) {
            case '+': cur_.kind = Tok::Plus; return;
            case '-': cur_.kind = Tok::Minus; return;
            case '*': cur_.kind = Tok::Star; return;
            case '/': cur_.kind = Tok::Slash; return;
            case '^': cur_.kind = Tok::Caret; return;
            case '(': cur_.kind = Tok::LParen; return;
            case ')': cur_.kind = Tok::RParen; return;
        }
        throw parse_error(pos_ - 1, "integer, 'zeta', 'xi', operator or parenthesis",
                          std::string("unexpected character '") + c + "'");
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    Token cur_;
};

// ---------------------------------------------------------------------------

struct Node;
using NodePtr = std::unique_ptr<Node>;

struct Node {
    enum class Kind { Int, Zeta, Xi, Neg, Add, Sub, Mul, Div, Pow, Paren } kind;
    BigInt value;  // Int
    i64 exponent = 0;  // Pow
    NodePtr lhs, rhs;
};

NodePtr leaf(Node::Kind k) {
    auto n = std::make_unique<Node>();
    n->kind = k;
    return n;
}

class Parser {
public:
    explicit Parser(std::string_view src) : lex_(src) {}

    NodePtr parse() {
        NodePtr e = expr();
        if (lex_.peek().kind != Tok::End)
            throw parse_error(lex_.peek().offset, "end of input or operator", "trailing input");
        return e;
    }

private:
    NodePtr expr() {
        NodePtr l = term();
        while (lex_.peek().kind == Tok::Plus || lex_.peek().kind == Tok::Minus) {
            Tok op = lex_.take().kind;
            NodePtr r = term();
            auto n = leaf(op == Tok::Plus ? Node::Kind::Add : Node::Kind::Sub);
            n->lhs = std::move(l);
            n->rhs = std::move(r);
            l = std::move(n);
        }
        return l;
    }

    NodePtr term() {
        NodePtr l = unary();
        while (lex_.peek().kind == Tok::Star || lex_.peek().kind == Tok::Slash) {
            Tok op = lex_.take().kind;
            NodePtr r = unary();
            auto n = leaf(op == Tok::Star ? Node::Kind::Mul : Node::Kind::Div);
            n->lhs = std::move(l);
            n->rhs = std::move(r);
            l = std::move(n);
        }
        return l;
    }

    // '-' binds looser than '^': -xi^4 is -(xi^4)
    NodePtr unary() {
        if (lex_.peek().kind == Tok::Minus) {
            lex_.take();
            auto n = leaf(Node::Kind::Neg);
            n->lhs = unary();
            return n;
        }
        return pow();
    }

    NodePtr pow() {
        NodePtr base = atom();
        if (lex_.peek().kind == Tok::Caret) {
            lex_.take();
            bool negative = false;
            if (lex_.peek().kind == Tok::Minus) {
                lex_.take();
                negative = true;
            }
            if (lex_.peek().kind != Tok::Int)
                throw parse_error(lex_.peek().offset, "integer literal", "exponent must be an integer");
            Token t = lex_.take();
            if (!t.value.fits_slong_p())
                throw parse_error(t.offset, "smaller exponent", "exponent out of range");
            auto n = leaf(Node::Kind::Pow);
            n->exponent = t.value.get_si() * (negative ? -1 : 1);
            n->lhs = std::move(base);
            return n;
        }
        return base;
    }

    NodePtr atom() {
        Token t = lex_.take();
        switch (t.kind) {
            case Tok::Int: {
                auto n = leaf(Node::Kind::Int);
                n->value = t.value;
                return n;
            }
            case Tok::Zeta: return leaf(Node::Kind::Zeta);
            case Tok::Xi: return leaf(Node::Kind::Xi);
            case Tok::LParen: {
                NodePtr e = expr();
                if (lex_.peek().kind != Tok::RParen)
                    throw parse_error(lex_.peek().offset, "')'", "unclosed parenthesis");
                lex_.take();
                // parentheses bound an element: at word level their content
                // folds into a single table
                auto n = leaf(Node::Kind::Paren);
                n->lhs = std::move(e);
                return n;
            }
            default:
                throw parse_error(t.offset, "integer, 'zeta', 'xi', '-' or '('", "expected an atom");
        }
    }

    Lexer lex_;
};

// Fold a subtree that must be a pure element (no '/' and no negative '^').
CycElem fold_elem(const Node& n, const CycRing& ring) {
    switch (n.kind) {
        case Node::Kind::Int: return int_embed(ring, n.value);
        case Node::Kind::Zeta: return make_elem(ring, {{0, 1, 1}});
        case Node::Kind::Xi: return make_elem(ring, {{1, 0, 1}});
        case Node::Kind::Neg: return neg(fold_elem(*n.lhs, ring));
        case Node::Kind::Paren: return fold_elem(*n.lhs, ring);
        case Node::Kind::Add: return add(fold_elem(*n.lhs, ring), fold_elem(*n.rhs, ring));
        case Node::Kind::Sub:
            return add(fold_elem(*n.lhs, ring), neg(fold_elem(*n.rhs, ring)));
        case Node::Kind::Mul: return mul(fold_elem(*n.lhs, ring), fold_elem(*n.rhs, ring));
        case Node::Kind::Div:
            throw precondition_error(errc::semantic_error,
                                     "'/' is not permitted inside an additive expression");
        case Node::Kind::Pow: {
            if (n.exponent < 0)
                throw precondition_error(errc::semantic_error,
                                         "negative exponent inside an additive expression");
            return elem_pow(fold_elem(*n.lhs, ring), n.exponent);
        }
    }
    throw internal_error("fold_elem: unhandled node");
}

bool is_multiplicative(const Node& n) {
    return n.kind == Node::Kind::Mul || n.kind == Node::Kind::Div || n.kind == Node::Kind::Pow;
}

void fold_word(const Node& n, const CycRing& ring, i64 outer, RadicalWord& w) {
    switch (n.kind) {
        case Node::Kind::Mul:
            fold_word(*n.lhs, ring, outer, w);
            fold_word(*n.rhs, ring, outer, w);
            return;
        case Node::Kind::Div:
            fold_word(*n.lhs, ring, outer, w);
            fold_word(*n.rhs, ring, -outer, w);
            return;
        case Node::Kind::Pow:
            if (n.exponent == 0) return;
            fold_word(*n.lhs, ring, outer * n.exponent, w);
            return;
        default: {
            CycElem e = fold_elem(n, ring);
            if (is_zero_table(e))
                throw precondition_error(errc::semantic_error, "word factor folds to zero");
            w.factors.emplace_back(std::move(e), outer);
            return;
        }
    }
}

}  // namespace

RadicalWord parse_element(std::string_view src, const CycRing& ring) {
    Parser parser(src);
    NodePtr ast = parser.parse();
    RadicalWord w;
    if (is_multiplicative(*ast)) {
        fold_word(*ast, ring, 1, w);
    } else {
        CycElem e = fold_elem(*ast, ring);
        if (is_zero_table(e))
            throw precondition_error(errc::semantic_error, "expression folds to zero");
        w.factors.emplace_back(std::move(e), 1);
    }
    return w;
}

// ---------------------------------------------------------------------------

std::string serialize_elem(const CycElem& e) {
    if (e.coeffs.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : e.coeffs) {
        BigInt mag = abs(c);
        bool negative = c < 0;
        if (first) {
            if (negative) out += "-";
            first = false;
        } else {
            out += negative ? " - " : " + ";
        }
        std::string part;
        bool has_sym = (key.i != 0) || (key.j != 0);
        if (mag != 1 || !has_sym) part += mag.get_str();
        if (key.i != 0) {
            if (!part.empty()) part += "*";
            part += "xi";
            if (key.i != 1) part += "^" + std::to_string(key.i);
        }
        if (key.j != 0) {
            if (!part.empty()) part += "*";
            part += "zeta";
            if (key.j != 1) part += "^" + std::to_string(key.j);
        }
        out += part;
    }
    return out;
}

std::string serialize_word(const RadicalWord& w) {
    if (w.factors.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.factors.size(); ++i) {
        const auto& [e, expo] = w.factors[i];
        if (i) out += "*";
        out += "(" + serialize_elem(e) + ")";
        if (expo != 1) out += "^" + std::to_string(expo);
    }
    return out;
}

}  // namespace cyclo
