#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "recipart/proof_table.hpp"

namespace recipart {

/// Names accepted by builtin_tables.
std::vector<std::string> builtin_table_names();

/// Built-in proof tables by name: "graham-q", "graham-s", "sp(p)", "m469",
/// "m469(M)", "odd15", "arbsmall(k)" and "arbsmall(k,alpha)". "m469" is the
/// M = 4 instance of "m469(M)". The last form keeps only the table for alpha
/// plus the tables it depends on.
/// Throws UnknownName.
TableCollection builtin_tables(std::string_view name);

/// Tables for S_p = {4/p^2, 6/p^2, ..., (2p^2 - 2p)/p^2, 1, 2} with Q the
/// property of being {2, p}-full. X defaults to the known threshold for
/// p = 3, 5 and to 2 otherwise.
TableCollection sp_tables(std::uint64_t p, std::optional<std::uint64_t> X = std::nullopt,
                          std::optional<std::uint64_t> M_prime = std::nullopt);

/// Tables for {2/3^(k-1), 4/3^k}, 5-free, taking 4/3^(k-1) as established.
TableCollection arbsmall_tables(std::uint64_t k);

/// 106 * 4^k - 98 * 3^k.
mpz_class arbsmall_bound(std::uint64_t k);

}  // namespace recipart
