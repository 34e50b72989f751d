#include "sejoin/space.hpp"

#include <sstream>

namespace sejoin {

std::string family_to_string(Family f) {
    switch (f) {
        case Family::Circle: return "circle";
        case Family::Sphere: return "sphere";
        case Family::DelPezzoBundle: return "del_pezzo_bundle";
        case Family::FermatLink: return "fermat_link";
        case Family::ThreeSasakian: return "three_sasakian";
        case Family::ToricOmega: return "toric_omega";
        case Family::Custom: return "custom";
    }
    return "custom";
}

std::string FamilyParams::canonical_name() const {
    std::ostringstream os;
    switch (family) {
        case Family::Circle:
            return "S1";
        case Family::Sphere:
            os << "S" << (2 * params.at(0) + 1);
            return os.str();
        case Family::DelPezzoBundle:
            os << "Sk(" << params.at(0) << ")";
            return os.str();
        case Family::FermatLink:
            os << "F(" << params.at(0) << "," << params.at(1) << ")";
            return os.str();
        case Family::ThreeSasakian:
            os << "T(" << params.at(0) << "," << params.at(1) << "," << params.at(2) << ")";
            return os.str();
        case Family::ToricOmega:
            os << "Omega(" << params.at(0);
            if (omega_order)
                os << ",order=" << *omega_order;
            os << ")";
            return os.str();
        case Family::Custom:
            return custom_name;
    }
    return custom_name;
}

std::string FamilyParams::sort_key() const {
    // family rank first, then params, zero-padded so string order matches
    // numeric order for any realistic magnitude
    std::ostringstream os;
    os << static_cast<int>(family) << "|";
    for (const Int& p : params) {
        std::string s = p.str();
        os << std::string(s.size() < 24 ? 24 - s.size() : 0, '0') << s << "|";
    }
    if (omega_order)
        os << "o" << *omega_order << "|";
    os << custom_name;
    return os.str();
}

std::vector<SeSpace> SeSpace::leaf_list() const {
    if (!joined_leaves.empty())
        return joined_leaves;
    return {*this};
}

bool SeSpace::operator==(const SeSpace& o) const {
    auto integral_eq = [&] {
        if (integral.has_value() != o.integral.has_value())
            return false;
        return !integral || *integral == *o.integral;
    };
    auto leaves_eq = [&] {
        if (joined_leaves.size() != o.joined_leaves.size())
            return false;
        for (std::size_t i = 0; i < joined_leaves.size(); ++i)
            if (joined_leaves[i] != o.joined_leaves[i])
                return false;
        return true;
    };
    return name == o.name && n == o.n && index == o.index && order == o.order &&
           local_orders == o.local_orders && regular == o.regular && smooth == o.smooth &&
           simply_connected == o.simply_connected && betti == o.betti && integral_eq() &&
           three_sasakian == o.three_sasakian && homogeneous == o.homogeneous &&
           se_irreducible == o.se_irreducible && h3_zero == o.h3_zero &&
           ke_certified == o.ke_certified && moduli_dim_lower == o.moduli_dim_lower &&
           family == o.family && leaves_eq();
}

std::string SeSpace::summary() const {
    std::ostringstream os;
    os << name << ": dim " << dim() << ", index " << index << ", order ";
    if (order.known())
        os << *order.value;
    else
        os << "unknown";
    os << ", betti " << betti.to_string();
    return os.str();
}

}  // namespace sejoin
