#pragma once

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>

#include <json.hpp>

#include "lcpqc/distance.hpp"
#include "lcpqc/lcp.hpp"
#include "lcpqc/oracle.hpp"
#include "lcpqc/qtcode.hpp"

namespace lcpqc {

using Json = nlohmann::ordered_json;

/// F_q from q = p^k and an optional modulus, either a comma list of F_p
/// coefficients (low degree first) or an expression in w such as "w^2+2w+2".
Field parse_field(std::uint64_t q, std::string_view modulus = {});

/// "g11;g12" (one generator) or "g11;g12;g22" (standard form), each entry in
/// polynomial text syntax.
QtCodeSpec parse_spec(const Field& field, int m, Elem lambda, std::string_view gens);

std::string format_gens(const QtCodeSpec& spec);

Json report_json(const LcpReport& r);
Json oracle_json(const OracleVerdict& v);
Json dlcp_json(const DlcpResult& d);

/// Reference table of best known minimum distances, CSV with header q,n,k,d.
class BklcTable {
public:
    /// Throws ParseError with the offending line number.
    static BklcTable parse(std::istream& in);
    static BklcTable load(const std::string& path);

    std::optional<int> lookup(std::uint64_t q, int n, int k) const;
    std::size_t size() const noexcept { return entries_.size(); }

private:
    std::map<std::tuple<std::uint64_t, int, int>, int> entries_;
};

/// "-" for unknown entries.
std::string format_bklc(std::optional<int> d);

}  // namespace lcpqc
