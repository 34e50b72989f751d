#pragma once

#include "sejoin/catalog.hpp"
#include "sejoin/space.hpp"

#include <memory>
#include <string>
#include <vector>

namespace sejoin {

// Join expression tree.  Grammar:
//   expr := atom ('*' atom)*                 ('*' is left associative)
//   atom := S<odd-dim> | Sk(<k>) | F(<d>,<n>) | T(<p1>,<p2>,<p3>)
//         | Omega(<k>[,order=<m>]) | @<catalog-name>
// S1 is the identity circle; S<2n+1> is the round sphere.
class JoinExpr {
public:
    struct Node {
        SeSpace leaf;                 // set when the node is a leaf
        std::unique_ptr<Node> left;   // both set when the node is a join
        std::unique_ptr<Node> right;
        bool is_leaf() const { return !left; }
    };

    explicit JoinExpr(std::unique_ptr<Node> root);

    const Node& root() const { return *root_; }

    // Flat leaf list in canonical order; associativity stable.
    std::vector<SeSpace> normalized() const;

private:
    std::unique_ptr<Node> root_;
};

JoinExpr parse_expr(const std::string& text, const Catalog& catalog = default_catalog());

// n-fold join over the flattened leaves.
SeSpace evaluate(const JoinExpr& expr);

}  // namespace sejoin
