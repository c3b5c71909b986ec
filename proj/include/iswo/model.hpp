#pragma once

#include <optional>
#include <string>
#include <vector>

namespace iswo {

// All times are integer minutes from midnight. The domain model never uses
// floating point except for the work/spreadover ratio, which is fractional
// by nature.
using Minutes = int;

struct ReliefOpportunity {
    Minutes time = 0;
    std::string location;
};

// One vehicle's day of work, delimited by relief opportunities.
struct Block {
    std::string id;
    std::vector<ReliefOpportunity> relief_opportunities; // strictly increasing times
};

// Indivisible work between two consecutive ROs on one vehicle.
struct PieceOfWork {
    int block_index = -1;   // position of the owning block in the instance
    int index_in_block = -1;
    Minutes start_min = 0;
    Minutes end_min = 0;
    int piece_id = -1;      // dense 0..P-1, block by block
    Minutes work_time = 0;  // end_min - start_min
};

// A run of consecutive pieces on one block, worked without interruption.
// Pieces on a block abut, so work_time == end_min - start_min.
struct Spell {
    int block_index = -1;
    int first_piece = -1; // index_in_block
    int last_piece = -1;  // inclusive
    Minutes start_min = 0;
    Minutes end_min = 0;
    Minutes work_time = 0;
};

// One driver's day: 1..max_spells chronologically ordered spells.
struct Shift {
    int id = -1; // dense id within its CandidatePool
    std::vector<Spell> spells;
    std::vector<int> pieces; // global piece ids, ascending
    Minutes work_time = 0;
    Minutes spreadover = 0;  // (last end + signoff) - (first start - signon)
    Minutes cost = 0;        // paid time proxy: == spreadover
    double ratio = 0.0;      // work_time / spreadover
    int n_pieces = 0;
    int n_spells = 0;
};

struct Rules {
    Minutes min_work_time = 180;
    Minutes max_work_time = 510;
    double min_ratio = 0.0;
    double max_ratio = 1.0;
    int max_spells = 4;
    Minutes max_spreadover = 780;
    Minutes min_break_between_spells = 30;
    Minutes signon_allowance = 0;
    Minutes signoff_allowance = 0;
};

struct Instance {
    std::string name;
    std::vector<Block> blocks;
    Rules rules;
    std::vector<PieceOfWork> pieces; // always derived, never read from input

    // Derives pieces; throws std::invalid_argument on non-increasing RO
    // times or a block with fewer than two ROs.
    static Instance build(std::string name, std::vector<Block> blocks, Rules rules);

    int n_pieces() const { return static_cast<int>(pieces.size()); }

    // Sum over blocks of (last RO time - first RO time).
    Minutes total_vehicle_work() const;
};

// All pieces of the given blocks, dense ids assigned block by block then by
// index within the block. Pure function of the instance's blocks.
std::vector<PieceOfWork> derive_pieces(const Instance& inst);

struct ValidationReport {
    std::vector<std::string> problems;
    bool ok() const { return problems.empty(); }
};

// Collects every structural and rule-bound violation; never throws and
// never mutates. An empty report means the instance is well-formed.
ValidationReport validate_instance(const Instance& inst);

// Checks every Shift invariant against the instance: spell chaining with
// minimum break, rule bounds, piece set consistency. Returns an explanation
// for the first violation, or nullopt when legal.
std::optional<std::string> check_shift(const Shift& shift, const Instance& inst);

// Populates pieces/work_time/spreadover/cost/ratio/n_* from spells.
// Spells must already be chronologically ordered.
void finalize_shift(Shift& shift, const Instance& inst);

} // namespace iswo
