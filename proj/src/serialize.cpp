#include "dlg2k/serialize.hpp"

#include "dlg2k/error.hpp"

namespace dlg2k {

ordered_json to_json(const DlgTriple& t) {
    ordered_json j;
    j["s"] = t.s;
    j["p"] = t.p;
    j["e"] = t.e.to_decimal();
    j["k"] = t.width().bits();
    return j;
}

ordered_json to_json(const DlgPair& pair) {
    return to_json(DlgTriple{pair.s, 0, pair.e});
}

DlgTriple triple_from_json(const ordered_json& j) {
    try {
        const Width w(j.at("k").get<unsigned>());
        return DlgTriple::make(j.at("s").get<unsigned>(), j.at("p").get<unsigned>(),
                               Residue::from_decimal(w, j.at("e").get<std::string>()));
    } catch (const nlohmann::json::exception& ex) {
        throw usage_error(std::string("malformed triple: ") + ex.what());
    }
}

} // namespace dlg2k
