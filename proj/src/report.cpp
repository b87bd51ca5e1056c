// SPDX-License-Identifier: Apache-2.0
#include "gic/report.hpp"

namespace gic {

using nlohmann::json;

json to_json(const Int &n)
{
    if (fits_json_integer(n))
        return n.get_si();
    return n.get_str();
}

json to_json(const IntPoly &f)
{
    json a = json::array();
    for (const auto &c : f.coeffs())
        a.push_back(to_json(c));
    return a;
}

json to_json(const Factorization &f)
{
    json out;
    out["p"] = f.p;
    out["unit"] = f.unit;
    json facs = json::array();
    for (const auto &[phi, e] : f.factors)
        facs.push_back({{"factor", phi.to_string()}, {"coeffs", phi.coeffs()}, {"multiplicity", e}});
    out["factors"] = facs;
    out["degrees"] = f.degrees();
    return out;
}

json to_json(const WeylCertificate &c)
{
    json out;
    out["certified"] = c.certified;
    out["prime_bound"] = c.prime_bound;
    out["irreducible_witness"] = c.irreducible_witness ? json(*c.irreducible_witness) : json(nullptr);
    json w = json::object();
    for (const auto &[cls, p] : c.witnesses)
        w[cls.to_string()] = p;
    out["class_witnesses"] = w;
    json miss = json::array();
    for (const auto &cls : c.missing)
        miss.push_back(cls.to_string());
    out["missing_classes"] = miss;
    out["skipped_primes"] = c.skipped;
    return out;
}

json to_json(const A7Certificate &c)
{
    json out;
    out["certified"] = c.certified;
    out["discriminant"] = to_json(c.discriminant);
    out["square_discriminant"] = c.square_discriminant;
    out["irreducible_witness"] = c.irreducible_witness ? json(*c.irreducible_witness) : json(nullptr);
    out["five_cycle_witness"] = c.five_cycle_witness ? json(*c.five_cycle_witness) : json(nullptr);
    return out;
}

json to_json(const LogBound &b)
{
    json out;
    out["tag"] = b.tag;
    if (b.ln_ln) {
        out["ln"] = nullptr;
        out["ln_ln"] = *b.ln_ln;
    } else {
        out["ln"] = b.ln;
    }
    out["radius"] = b.radius;
    out["display"] = b.to_string();
    return out;
}

json to_json(const MainBound &b)
{
    json out;
    out["term1"] = to_json(b.term1);
    out["term2"] = to_json(b.term2);
    out["term3"] = b.term3 ? to_json(*b.term3) : json(nullptr);
    out["value"] = to_json(b.value);
    out["dominant_term"] = b.dominant;
    return out;
}

json to_json(const ExclusionReport &r)
{
    json out;
    out["class"] = r.kind;
    out["vacuous"] = r.vacuous;
    out["threshold_ln"] = r.threshold_ln;
    out["generators"] = r.generators;
    json norms = json::array(), ints = json::array();
    for (const auto &n : r.norms) {
        norms.push_back({{"relation", n.relation}, {"value", to_json(n.value)}, {"log_bound", n.log_bound}});
        ints.push_back(n.value.get_str());
    }
    out["norms"] = norms;
    out["integers"] = ints;
    json gcds = json::array();
    for (const auto &g : r.gcds)
        gcds.push_back(to_json(g));
    out["gcds"] = gcds;
    json primes = json::array();
    for (const auto &p : r.small_primes)
        primes.push_back(to_json(p));
    out["small_primes"] = primes;
    json cof = json::array();
    for (const auto &c : r.cofactors)
        cof.push_back(to_json(c));
    out["cofactors"] = cof;
    out["unconstrained_assignments"] = r.unconstrained;
    out["bounds_hold"] = r.bounds_hold();
    out["notes"] = r.notes;
    return out;
}

} // namespace gic
