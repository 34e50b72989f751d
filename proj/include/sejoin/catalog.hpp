#pragma once

#include "sejoin/space.hpp"

#include <map>
#include <string>
#include <vector>

namespace sejoin {

// Unit circle with its flat structure: the monoid identity.  Index 0 by
// convention, leaf space a point.
SeSpace make_circle();

// Round sphere S^{2n+1}, n >= 1.  Ind = n+1, Ord = 1.
SeSpace make_sphere(const Int& n);

// Circle bundle S_k over the del Pezzo surface P_k, 3 <= k <= 8.
SeSpace make_del_pezzo_bundle(const Int& k);

// Link of the degree-d Fermat hypersurface in P^{n+1}, 1 <= d <= n+1.
SeSpace make_fermat_link(const Int& d, const Int& n);

// Ord(S(p1,p2,p3)): lcm of the half pairwise sums when all p_i are odd,
// lcm of the full pairwise sums otherwise.  Requires pairwise coprime p_i.
Int order_spq(const Int& p1, const Int& p2, const Int& p3);

// 3-Sasakian 7-manifold S(p1,p2,p3) with pairwise coprime p_i.
SeSpace make_three_sasakian(const Int& p1, const Int& p2, const Int& p3);

// Toric 3-Sasakian 7-manifold S(Omega_k) with b_2 = k and H^3 = 0.  The
// order is only known when supplied (the k = 1 case reduces to S(p1,p2,p3)).
SeSpace make_toric_omega(const Int& k, const std::optional<Int>& order = std::nullopt);

// One catalog record: field name -> raw value, as read from the file.
using CatalogRecord = std::vector<std::pair<std::string, std::string>>;

// Builds an SeSpace from a record and validates it.  For family records the
// constructor above is the source of truth and every explicitly given field
// must agree with it; custom records are built from the raw fields alone.
// Throws ParseError or InvariantViolation.
SeSpace parse_space(const CatalogRecord& record);

class Catalog {
public:
    explicit Catalog(std::vector<SeSpace> spaces);

    const std::vector<SeSpace>& spaces() const { return spaces_; }
    const SeSpace* find(const std::string& name) const;

private:
    std::vector<SeSpace> spaces_;
    std::map<std::string, std::size_t> by_name_;
};

Catalog load_catalog(const std::string& path);
Catalog load_catalog_text(const std::string& text);

// The catalog compiled into the library; identical to data/catalog.txt.
const std::string& default_catalog_text();
const Catalog& default_catalog();

}  // namespace sejoin
