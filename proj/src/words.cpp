#include "pkroots/words.hpp"

#include <cctype>

#include "pkroots/specfile.hpp"

namespace pkroots {

namespace {

struct Cursor {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& what) {
        throw validation_error("element expression, position " + std::to_string(pos + 1) + ": " + what);
    }

    long integer() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            fail("expected an integer");
        return std::stol(s.substr(start, pos - start));
    }

    Scalar scalar(const Field& f) {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/')) ++pos;
        if (pos == start) fail("expected a scalar");
        std::string tok = s.substr(start, pos - start);
        size_t slash = tok.find('/');
        if (slash == std::string::npos) return Scalar::of_mpz(f, mpz_class(tok));
        if (!f.is_rational()) fail("fractional values are not valid over " + f.str());
        return Scalar::rational(mpz_class(tok.substr(0, slash)), mpz_class(tok.substr(slash + 1)));
    }

    std::string matrix_literal() {
        skip_ws();
        size_t start = pos;
        int depth = 0;
        while (pos < s.size()) {
            if (s[pos] == '[') ++depth;
            if (s[pos] == ']') {
                --depth;
                if (depth == 0) { ++pos; break; }
            }
            ++pos;
        }
        if (depth != 0) fail("unbalanced matrix literal");
        return s.substr(start, pos - start);
    }
};

Matrix parse_atom(Cursor& cur, const TriangularGroup& ctx) {
    const Field& f = ctx.field();
    char c = cur.peek();
    if (c == 'e') {
        ++cur.pos;
        return Matrix::identity(f, ctx.dim());
    }
    if (c == 'g') {
        ++cur.pos;
        long idx = cur.integer();
        if (idx < 1 || idx > long(ctx.generators().size()))
            cur.fail("generator index out of range: g" + std::to_string(idx));
        return ctx.generators()[size_t(idx - 1)];
    }
    if (c == 'n') {
        ++cur.pos;
        if (!cur.eat('(')) cur.fail("expected '(' after n");
        Vec values;
        if (!cur.eat(')')) {
            do {
                values.push_back(cur.scalar(f));
            } while (cur.eat(','));
            if (!cur.eat(')')) cur.fail("expected ')'");
        }
        return ctx.unipotent_from_support(values);
    }
    if (c == '[') {
        std::string lit = cur.matrix_literal();
        ordered_json doc;
        try {
            doc = ordered_json::parse(lit);
        } catch (const nlohmann::json::parse_error& e) {
            cur.fail(std::string("bad matrix literal: ") + e.what());
        }
        Matrix m = matrix_from_json(f, doc, "element matrix");
        if (m.rows() != ctx.dim() || m.cols() != ctx.dim())
            cur.fail("matrix literal has the wrong dimension");
        return m;
    }
    cur.fail("expected 'e', 'g<i>', 'n(...)' or a matrix literal");
}

} // namespace

Matrix parse_element(const TriangularGroup& ctx, const std::string& text) {
    Cursor cur{text};
    if (cur.done()) throw validation_error("element expression is empty");
    Matrix acc = Matrix::identity(ctx.field(), ctx.dim());
    for (;;) {
        Matrix atom = parse_atom(cur, ctx);
        if (cur.eat('^')) atom = atom.pow(cur.integer());
        acc = acc * atom;
        if (cur.done()) break;
        if (!cur.eat('*')) cur.fail("expected '*' between terms");
    }
    if (!ctx.contains(acc))
        throw validation_error("element does not belong to the group context");
    return acc;
}

} // namespace pkroots
