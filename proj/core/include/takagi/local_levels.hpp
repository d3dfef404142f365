#pragma once

#include "takagi/binexp.hpp"
#include "takagi/errors.hpp"
#include "takagi/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace takagi {

/// Digits between two consecutive balance points: word spans positions
/// start+1 .. end, where D returns to its baseline only at the endpoints.
struct Block {
    std::uint64_t start = 0;
    std::uint64_t end = 0;
    Bits word;
};

/// Block decomposition of an expansion. When the balance set is finite, the
/// digits after the last balance point form one unbounded tail block, kept
/// as the expansion of its digit stream. When it is infinite, the block list
/// is eventually periodic: `prefix`, then `cycle` repeating forever.
struct BlockSeq {
    std::vector<Block> prefix;
    std::vector<Block> cycle;
    std::optional<BinExp> tail;
    std::uint64_t tail_start = 0;

    bool finite() const { return tail.has_value(); }
    std::size_t finite_block_count() const { return prefix.size() + 1; }
};

BlockSeq blocks(const BinExp& b);

/// Complements every digit of block k. Blocks are indexed from 0 in order;
/// for a finite balance set the last index is the unbounded tail block.
/// The result has the same balance set and the same exact tau value.
BinExp flip_block(const BinExp& b, std::size_t k);

/// x ~ x': identical balance sets, every aligned block equal or complemented.
bool equivalent(const BinExp& a, const BinExp& b);

/// The unique equivalent expansion with D_j >= 0 for all j, obtained by
/// orienting every block to start with digit 0; the Omega^L member and
/// leftmost point of the local level set.
BinExp left_endpoint(const BinExp& b);

enum class Cardinality { Finite, Uncountable };

struct LocalLevelSetDesc {
    BinExp left_endpoint;
    BalanceSet balance;
    Cardinality cardinality = Cardinality::Finite;
    /// K with #members = 2^K; meaningful when cardinality is Finite.
    unsigned log2_size = 0;
    /// tau of every member.
    Rat level;
    /// k/r for uncountable sets (balance points per period over period
    /// length); 0 for finite sets.
    std::optional<Rat> hausdorff_dim;
};

LocalLevelSetDesc local_level_set(const BinExp& b);

struct EnumLimits {
    std::size_t max_members = std::size_t{1} << 20;
};

/// Finite descriptor: all 2^K members, depth ignored. Uncountable: 2^depth
/// representatives obtained by flipping among the first `depth` blocks and
/// completing with the left-endpoint orientation.
std::vector<BinExp> enumerate_members(const LocalLevelSetDesc& desc, unsigned depth,
                                      const EnumLimits& lim = {});

/// x_k = 1/2 - sum_{j=1..k} 4^-j, the k-th point of the level set L(1/2);
/// nullopt gives the limit point x_inf = 1/6. tau(x_k) = 1/2 exactly, and
/// L(1/2) = {x_k} union {1 - x_k}.
Rat level_half_family(std::optional<unsigned> k);

struct FamilyMember {
    Rat x;       // x_k(B') = B' + x_k / 2^{2m}
    Rat level;   // tau(B') + 2^-(2m+1), the same for every k
};

/// Points on the dyadic level tau(B') + 2^-(2m+1) built from a balanced
/// 2m-digit breakpoint B' in Omega^L; distinct k land in distinct local
/// level sets. Throws std::domain_error if B' is not such a breakpoint.
FamilyMember infinite_level_family(const Rat& breakpoint, unsigned k);

} // namespace takagi
