#include "iswo/shiftgen.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace iswo {

std::vector<Spell> enumerate_spells(const Block& block, int block_index, const Rules& rules) {
    const auto& ros = block.relief_opportunities;
    const int n_pieces = static_cast<int>(ros.size()) - 1;
    std::vector<Spell> spells;
    for (int i = 0; i < n_pieces; ++i) {
        for (int j = i; j < n_pieces; ++j) {
            const Minutes start = ros[i].time;
            const Minutes end = ros[j + 1].time;
            if (end - start > rules.max_work_time) break; // extending j only grows the spell
            Spell sp;
            sp.block_index = block_index;
            sp.first_piece = i;
            sp.last_piece = j;
            sp.start_min = start;
            sp.end_min = end;
            sp.work_time = end - start;
            spells.push_back(sp);
        }
    }
    return spells;
}

namespace {

// Two spells chain iff the second starts at least min_break after the first
// ends. On one block, back-to-back spells at the same RO are forbidden even
// with min_break == 0: that is one longer spell.
bool chainable(const Spell& a, const Spell& b, const Rules& rules) {
    if (b.start_min < a.end_min + rules.min_break_between_spells) return false;
    if (a.block_index == b.block_index && b.first_piece == a.last_piece + 1) return false;
    return true;
}

struct Chainer {
    const Instance& inst;
    const std::vector<Spell>& spells; // canonical order: (block, first, last)
    std::size_t pool_cap;
    std::vector<Shift>& out;

    std::vector<Spell> chain;
    Minutes chain_work = 0;

    void emit_if_legal() {
        const Rules& r = inst.rules;
        if (chain_work < r.min_work_time || chain_work > r.max_work_time) return;
        const Minutes spread = (chain.back().end_min + r.signoff_allowance) -
                               (chain.front().start_min - r.signon_allowance);
        if (spread > r.max_spreadover) return;
        const double ratio = static_cast<double>(chain_work) / static_cast<double>(spread);
        if (ratio < r.min_ratio || ratio > r.max_ratio) return;
        if (out.size() >= pool_cap) {
            throw std::runtime_error("pool size limit exceeded (cap " + std::to_string(pool_cap) + ")");
        }
        Shift s;
        s.id = static_cast<int>(out.size());
        s.spells = chain;
        finalize_shift(s, inst);
        out.push_back(std::move(s));
    }

    void extend() {
        emit_if_legal();
        if (static_cast<int>(chain.size()) >= inst.rules.max_spells) return;
        for (const Spell& next : spells) {
            if (!chainable(chain.back(), next, inst.rules)) continue;
            // max_work_time prunes the whole subtree; spreadover/ratio only
            // gate emission since a later spell cannot shrink them back.
            if (chain_work + next.work_time > inst.rules.max_work_time) continue;
            const Minutes spread = (next.end_min + inst.rules.signoff_allowance) -
                                   (chain.front().start_min - inst.rules.signon_allowance);
            if (spread > inst.rules.max_spreadover) continue;
            chain.push_back(next);
            chain_work += next.work_time;
            extend();
            chain_work -= next.work_time;
            chain.pop_back();
        }
    }
};

} // namespace

CandidatePool enumerate_shifts(const Instance& inst, std::size_t pool_cap) {
    std::vector<Spell> spells;
    for (int b = 0; b < static_cast<int>(inst.blocks.size()); ++b) {
        auto block_spells = enumerate_spells(inst.blocks[b], b, inst.rules);
        spells.insert(spells.end(), block_spells.begin(), block_spells.end());
    }

    CandidatePool pool;
    Chainer chainer{inst, spells, pool_cap, pool.shifts, {}, 0};
    for (const Spell& first : spells) {
        chainer.chain.assign(1, first);
        chainer.chain_work = first.work_time;
        chainer.extend();
    }

    pool.coverage.assign(inst.pieces.size(), {});
    for (const Shift& s : pool.shifts) {
        for (int piece : s.pieces) pool.coverage[piece].push_back(s.id);
    }
    std::vector<int> uncovered;
    for (int p = 0; p < inst.n_pieces(); ++p) {
        if (pool.coverage[p].empty()) uncovered.push_back(p);
    }
    if (!uncovered.empty()) {
        std::string msg = "uncoverable piece(s):";
        for (int p : uncovered) msg += " " + std::to_string(p);
        throw std::runtime_error(msg);
    }
    if (pool.shifts.empty()) {
        throw std::runtime_error("no legal shift exists for this instance");
    }

    CriterionBounds& b = pool.bounds;
    b.max_work_time = b.min_work_time = pool.shifts.front().work_time;
    b.max_ratio = b.min_ratio = pool.shifts.front().ratio;
    b.max_pieces = b.min_pieces = pool.shifts.front().n_pieces;
    for (const Shift& s : pool.shifts) {
        b.max_work_time = std::max(b.max_work_time, s.work_time);
        b.min_work_time = std::min(b.min_work_time, s.work_time);
        b.max_ratio = std::max(b.max_ratio, s.ratio);
        b.min_ratio = std::min(b.min_ratio, s.ratio);
        b.max_pieces = std::max(b.max_pieces, s.n_pieces);
        b.min_pieces = std::min(b.min_pieces, s.n_pieces);
    }
    return pool;
}

} // namespace iswo
