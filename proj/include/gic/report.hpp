// SPDX-License-Identifier: Apache-2.0
#ifndef GIC_REPORT_HPP
#define GIC_REPORT_HPP

#include "gic/bounds.hpp"
#include "gic/exclusion.hpp"
#include "gic/finitefield.hpp"
#include "gic/numkernel.hpp"
#include "gic/weylcert.hpp"

#include <json.hpp>

namespace gic {

/* Integers of magnitude >= 2^53 become decimal strings. */
nlohmann::json to_json(const Int &n);
nlohmann::json to_json(const IntPoly &f);  // coefficient list, constant first
nlohmann::json to_json(const Factorization &f);
nlohmann::json to_json(const WeylCertificate &c);
nlohmann::json to_json(const A7Certificate &c);
nlohmann::json to_json(const LogBound &b);
nlohmann::json to_json(const MainBound &b);
nlohmann::json to_json(const ExclusionReport &r);

} // namespace gic

#endif
