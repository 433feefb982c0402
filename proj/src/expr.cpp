#include "expr.hpp"

#include <cctype>

namespace grasscoh {

namespace {

class Parser {
  public:
    explicit Parser(const std::string& text) : text_(text) {}

    std::unique_ptr<Expr> run() {
        auto e = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
        return e;
    }

  private:
    const std::string& text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    static std::unique_ptr<Expr> node(Expr::Node kind) {
        auto e = std::make_unique<Expr>();
        e->kind = kind;
        return e;
    }

    static std::unique_ptr<Expr> binary(Expr::Node kind, std::unique_ptr<Expr> a,
                                        std::unique_ptr<Expr> b) {
        auto e = node(kind);
        e->children.push_back(std::move(a));
        e->children.push_back(std::move(b));
        return e;
    }

    std::unique_ptr<Expr> expr() {
        std::unique_ptr<Expr> acc;
        if (eat('-')) {
            auto e = node(Expr::Node::neg);
            e->children.push_back(term());
            acc = std::move(e);
        } else {
            acc = term();
        }
        while (true) {
            if (eat('+')) acc = binary(Expr::Node::add, std::move(acc), term());
            else if (eat('-')) acc = binary(Expr::Node::sub, std::move(acc), term());
            else return acc;
        }
    }

    std::unique_ptr<Expr> term() {
        auto acc = factor();
        while (eat('*')) acc = binary(Expr::Node::mul, std::move(acc), factor());
        return acc;
    }

    std::unique_ptr<Expr> factor() {
        auto base = atom();
        if (eat('^')) {
            auto e = node(Expr::Node::pow);
            e->index = static_cast<int>(uint_lit("exponent"));
            e->children.push_back(std::move(base));
            return e;
        }
        return base;
    }

    std::string digits(const char* what) {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError(std::string("expected ") + what, start);
        return text_.substr(start, pos_ - start);
    }

    int uint_lit(const char* what) {
        std::size_t at = pos_;
        std::string s = digits(what);
        if (s.size() > 6) throw ParseError(std::string(what) + " is too large", at);
        return std::stoi(s);
    }

    std::unique_ptr<Expr> atom() {
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            auto e = node(Expr::Node::number);
            Int num(digits("number"));
            if (eat('/')) {
                std::size_t at = pos_;
                Int den(digits("denominator"));
                if (den == 0) throw ParseError("zero denominator", at);
                e->value = Rational(num, den);
            } else {
                e->value = Rational(num);
            }
            return e;
        }
        if (c == 'u') {
            ++pos_;
            return node(Expr::Node::uvar);
        }
        if (c == 'c') {
            ++pos_;
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] < '1' || text_[pos_] > '9')
                throw ParseError("expected generator index 1..9 after 'c'", pos_);
            auto e = node(Expr::Node::cvar);
            e->index = text_[pos_++] - '0';
            return e;
        }
        if (c == 's') {
            ++pos_;
            if (!eat('[')) throw ParseError("expected '[' after 's'", pos_);
            std::vector<int> parts;
            if (peek() != ']') {
                parts.push_back(static_cast<int>(uint_lit("partition part")));
                while (eat(',')) parts.push_back(static_cast<int>(uint_lit("partition part")));
            }
            std::size_t at = pos_;
            if (!eat(']')) throw ParseError("expected ']'", pos_);
            auto e = node(Expr::Node::schur);
            try {
                e->partition = Partition(std::move(parts));
            } catch (const std::invalid_argument& ex) {
                throw ParseError(ex.what(), at);
            }
            return e;
        }
        if (c == '(') {
            ++pos_;
            auto e = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return e;
        }
        throw ParseError("expected a number, 'u', 'c<i>', 's[..]', or '('", pos_);
    }
};

bool pure_u(const ProductClass& x) {
    return x.even_part().is_zero() && !x.u_part().is_zero();
}

ProductClass mul_checked(const ProductClass& a, const ProductClass& b) {
    if (pure_u(a) && pure_u(b)) throw std::invalid_argument("u^2 = 0 in this ring");
    return a * b;
}

}  // namespace

std::string Expr::str() const {
    switch (kind) {
        case Node::number: return rational_str(value);
        case Node::uvar: return "u";
        case Node::cvar: return "c" + std::to_string(index);
        case Node::schur: return "s" + partition.str();
        case Node::neg: return "-" + children[0]->str();
        case Node::add: return "(" + children[0]->str() + " + " + children[1]->str() + ")";
        case Node::sub: return "(" + children[0]->str() + " - " + children[1]->str() + ")";
        case Node::mul: return children[0]->str() + "*" + children[1]->str();
        case Node::pow: return children[0]->str() + "^" + std::to_string(index);
    }
    return "";
}

std::unique_ptr<Expr> parse_expr(const std::string& text) { return Parser(text).run(); }

ProductClass elaborate(const Expr& e, const ProductContext& ctx) {
    switch (e.kind) {
        case Expr::Node::number: return product_unit(ctx) * e.value;
        case Expr::Node::uvar: return product_u(ctx);
        case Expr::Node::cvar: {
            if (e.index > ctx.inner().k())
                throw std::invalid_argument("c" + std::to_string(e.index) +
                                            " is not a generator of this ring (k = " +
                                            std::to_string(ctx.inner().k()) + ")");
            return embed(ctx, sigma(ctx.inner(), Partition(std::vector<int>(e.index, 1))));
        }
        case Expr::Node::schur: {
            if (!fits_in_box(e.partition, ctx.inner().box()))
                throw std::invalid_argument("partition " + e.partition.str() +
                                            " does not fit the box of this ring");
            return embed(ctx, sigma(ctx.inner(), e.partition));
        }
        case Expr::Node::neg: return -elaborate(*e.children[0], ctx);
        case Expr::Node::add: return elaborate(*e.children[0], ctx) + elaborate(*e.children[1], ctx);
        case Expr::Node::sub: return elaborate(*e.children[0], ctx) - elaborate(*e.children[1], ctx);
        case Expr::Node::mul:
            return mul_checked(elaborate(*e.children[0], ctx), elaborate(*e.children[1], ctx));
        case Expr::Node::pow: {
            ProductClass base = elaborate(*e.children[0], ctx);
            if (pure_u(base) && e.index > 1) throw std::invalid_argument("u^2 = 0 in this ring");
            ProductClass acc = product_unit(ctx);
            for (int i = 0; i < e.index; ++i) acc = mul_checked(acc, base);
            return acc;
        }
    }
    throw std::invalid_argument("malformed expression tree");
}

GrassClass elaborate_grass(const Expr& e, const RingContext& ctx) {
    switch (e.kind) {
        case Expr::Node::number: return grass_unit(ctx) * e.value;
        case Expr::Node::uvar:
            throw std::invalid_argument("u is not available in the bare Grassmannian ring");
        case Expr::Node::cvar: {
            if (e.index > ctx.k())
                throw std::invalid_argument("c" + std::to_string(e.index) +
                                            " is not a generator of this ring (k = " +
                                            std::to_string(ctx.k()) + ")");
            return sigma(ctx, Partition(std::vector<int>(e.index, 1)));
        }
        case Expr::Node::schur: {
            if (!fits_in_box(e.partition, ctx.box()))
                throw std::invalid_argument("partition " + e.partition.str() +
                                            " does not fit the box of this ring");
            return sigma(ctx, e.partition);
        }
        case Expr::Node::neg: return -elaborate_grass(*e.children[0], ctx);
        case Expr::Node::add:
            return elaborate_grass(*e.children[0], ctx) + elaborate_grass(*e.children[1], ctx);
        case Expr::Node::sub:
            return elaborate_grass(*e.children[0], ctx) - elaborate_grass(*e.children[1], ctx);
        case Expr::Node::mul:
            return elaborate_grass(*e.children[0], ctx) * elaborate_grass(*e.children[1], ctx);
        case Expr::Node::pow: {
            GrassClass base = elaborate_grass(*e.children[0], ctx);
            GrassClass acc = grass_unit(ctx);
            for (int i = 0; i < e.index; ++i) acc = acc * base;
            return acc;
        }
    }
    throw std::invalid_argument("malformed expression tree");
}

}  // namespace grasscoh
