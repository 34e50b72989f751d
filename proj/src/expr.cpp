#include "sejoin/expr.hpp"

#include "sejoin/errors.hpp"
#include "sejoin/join.hpp"

#include <algorithm>
#include <cctype>

namespace sejoin {

JoinExpr::JoinExpr(std::unique_ptr<Node> root) : root_(std::move(root)) {
    if (!root_)
        throw std::invalid_argument("JoinExpr: empty tree");
}

namespace {

void collect(const JoinExpr::Node& node, std::vector<SeSpace>& out) {
    if (node.is_leaf()) {
        out.push_back(node.leaf);
        return;
    }
    collect(*node.left, out);
    collect(*node.right, out);
}

class Parser {
public:
    Parser(const std::string& text, const Catalog& catalog)
        : text_(text), catalog_(catalog) {}

    std::unique_ptr<JoinExpr::Node> parse() {
        auto node = parse_atom();
        skip_ws();
        while (!eof()) {
            if (peek() != '*')
                throw ParseError("expected '*' between atoms", pos_ + 1);
            ++pos_;
            auto rhs = parse_atom();
            auto parent = std::make_unique<JoinExpr::Node>();
            parent->left = std::move(node);
            parent->right = std::move(rhs);
            node = std::move(parent);
            skip_ws();
        }
        return node;
    }

private:
    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }

    Int parse_int() {
        skip_ws();
        const std::size_t start = pos_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (pos_ == start)
            throw ParseError("expected an integer", start + 1);
        return Int(text_.substr(start, pos_ - start));
    }

    void expect(char c) {
        skip_ws();
        if (eof() || peek() != c)
            throw ParseError(std::string("expected '") + c + "'", pos_ + 1);
        ++pos_;
    }

    std::vector<Int> parse_args(std::size_t count) {
        expect('(');
        std::vector<Int> args;
        for (std::size_t i = 0; i < count; ++i) {
            if (i)
                expect(',');
            args.push_back(parse_int());
        }
        expect(')');
        return args;
    }

    std::unique_ptr<JoinExpr::Node> leaf(SeSpace s) {
        auto node = std::make_unique<JoinExpr::Node>();
        node->leaf = std::move(s);
        return node;
    }

    std::unique_ptr<JoinExpr::Node> parse_atom() {
        skip_ws();
        if (eof())
            throw ParseError("expected an atom", pos_ + 1);
        const std::size_t start = pos_;

        if (peek() == '@') {
            ++pos_;
            std::size_t name_start = pos_;
            while (!eof() && !std::isspace(static_cast<unsigned char>(peek())) && peek() != '*')
                ++pos_;
            const std::string name = text_.substr(name_start, pos_ - name_start);
            if (name.empty())
                throw ParseError("expected a catalog name after '@'", pos_ + 1);
            const SeSpace* s = catalog_.find(name);
            if (!s)
                throw ParseError("unknown catalog atom '@" + name + "'", start + 1);
            return leaf(*s);
        }

        // keyword
        std::size_t kw_end = pos_;
        while (kw_end < text_.size() &&
               (std::isalpha(static_cast<unsigned char>(text_[kw_end]))))
            ++kw_end;
        const std::string kw = text_.substr(pos_, kw_end - pos_);

        if (kw == "S") {
            pos_ = kw_end;
            // digits immediately after S: dimension; 'Sk(' handled below
            const Int dim = parse_int();
            if (dim % 2 == 0)
                throw ParseError("sphere dimension must be odd", start + 1);
            if (dim == 1)
                return leaf(make_circle());
            return leaf(make_sphere((dim - 1) / 2));
        }
        if (kw == "Sk") {
            pos_ = kw_end;
            auto args = parse_args(1);
            return leaf(make_del_pezzo_bundle(args[0]));
        }
        if (kw == "F") {
            pos_ = kw_end;
            auto args = parse_args(2);
            return leaf(make_fermat_link(args[0], args[1]));
        }
        if (kw == "T") {
            pos_ = kw_end;
            auto args = parse_args(3);
            return leaf(make_three_sasakian(args[0], args[1], args[2]));
        }
        if (kw == "Omega") {
            pos_ = kw_end;
            expect('(');
            const Int k = parse_int();
            std::optional<Int> order;
            skip_ws();
            if (!eof() && peek() == ',') {
                ++pos_;
                skip_ws();
                const std::string tag = "order=";
                if (text_.compare(pos_, tag.size(), tag) != 0)
                    throw ParseError("expected 'order=<m>'", pos_ + 1);
                pos_ += tag.size();
                order = parse_int();
            }
            expect(')');
            return leaf(make_toric_omega(k, order));
        }
        throw ParseError("unknown atom '" + (kw.empty() ? std::string(1, peek()) : kw) + "'",
                         start + 1);
    }

    const std::string& text_;
    const Catalog& catalog_;
    std::size_t pos_ = 0;
};

}  // namespace

std::vector<SeSpace> JoinExpr::normalized() const {
    std::vector<SeSpace> leaves;
    collect(*root_, leaves);
    std::stable_sort(leaves.begin(), leaves.end(), [](const SeSpace& a, const SeSpace& b) {
        return a.family.sort_key() < b.family.sort_key();
    });
    return leaves;
}

JoinExpr parse_expr(const std::string& text, const Catalog& catalog) {
    Parser p(text, catalog);
    return JoinExpr(p.parse());
}

SeSpace evaluate(const JoinExpr& expr) { return n_fold_join(expr.normalized()); }

}  // namespace sejoin
