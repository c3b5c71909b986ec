#include "iswo/model.hpp"

#include <algorithm>
#include <stdexcept>

namespace iswo {

std::vector<PieceOfWork> derive_pieces(const Instance& inst) {
    std::vector<PieceOfWork> pieces;
    int next_id = 0;
    for (int b = 0; b < static_cast<int>(inst.blocks.size()); ++b) {
        const Block& block = inst.blocks[b];
        const auto& ros = block.relief_opportunities;
        if (ros.size() < 2) {
            throw std::invalid_argument("block '" + block.id + "' has fewer than two relief opportunities");
        }
        for (std::size_t i = 0; i + 1 < ros.size(); ++i) {
            if (ros[i + 1].time <= ros[i].time) {
                throw std::invalid_argument("block '" + block.id + "' has non-increasing RO times");
            }
            PieceOfWork p;
            p.block_index = b;
            p.index_in_block = static_cast<int>(i);
            p.start_min = ros[i].time;
            p.end_min = ros[i + 1].time;
            p.piece_id = next_id++;
            p.work_time = p.end_min - p.start_min;
            pieces.push_back(p);
        }
    }
    return pieces;
}

Instance Instance::build(std::string name, std::vector<Block> blocks, Rules rules) {
    Instance inst;
    inst.name = std::move(name);
    inst.blocks = std::move(blocks);
    inst.rules = rules;
    inst.pieces = derive_pieces(inst);
    return inst;
}

Minutes Instance::total_vehicle_work() const {
    Minutes total = 0;
    for (const Block& b : blocks) {
        if (b.relief_opportunities.size() >= 2) {
            total += b.relief_opportunities.back().time - b.relief_opportunities.front().time;
        }
    }
    return total;
}

ValidationReport validate_instance(const Instance& inst) {
    ValidationReport report;
    auto add = [&report](std::string msg) { report.problems.push_back(std::move(msg)); };

    for (const Block& block : inst.blocks) {
        const auto& ros = block.relief_opportunities;
        if (ros.size() < 2) {
            add("block '" + block.id + "' has no pieces (fewer than two relief opportunities)");
            continue;
        }
        for (std::size_t i = 0; i + 1 < ros.size(); ++i) {
            if (ros[i + 1].time <= ros[i].time) {
                add("block '" + block.id + "' has non-increasing RO times at position " + std::to_string(i + 1));
            }
        }
        if (ros.front().time < 0) {
            add("block '" + block.id + "' has a negative RO time");
        }
    }

    const Rules& r = inst.rules;
    if (r.min_work_time > r.max_work_time) add("rules: min_work_time exceeds max_work_time");
    if (r.min_ratio > r.max_ratio) add("rules: min_ratio exceeds max_ratio");
    if (r.max_spells < 1) add("rules: max_spells must be at least 1");
    if (r.max_spreadover <= 0) add("rules: max_spreadover must be positive");
    if (r.min_break_between_spells < 0) add("rules: min_break_between_spells is negative");
    if (r.signon_allowance < 0 || r.signoff_allowance < 0) add("rules: negative sign-on/sign-off allowance");

    if (!inst.pieces.empty()) {
        for (int i = 0; i < static_cast<int>(inst.pieces.size()); ++i) {
            if (inst.pieces[i].piece_id != i) {
                add("piece ids are not dense/ordered");
                break;
            }
        }
    }
    return report;
}

void finalize_shift(Shift& shift, const Instance& inst) {
    shift.pieces.clear();
    shift.work_time = 0;
    int piece_base = 0;
    std::vector<int> block_base(inst.blocks.size(), 0);
    for (std::size_t b = 0; b < inst.blocks.size(); ++b) {
        block_base[b] = piece_base;
        piece_base += static_cast<int>(inst.blocks[b].relief_opportunities.size()) - 1;
    }
    for (const Spell& sp : shift.spells) {
        for (int i = sp.first_piece; i <= sp.last_piece; ++i) {
            shift.pieces.push_back(block_base[sp.block_index] + i);
        }
        shift.work_time += sp.work_time;
    }
    std::sort(shift.pieces.begin(), shift.pieces.end());
    const Minutes signon = inst.rules.signon_allowance;
    const Minutes signoff = inst.rules.signoff_allowance;
    shift.spreadover = (shift.spells.back().end_min + signoff) - (shift.spells.front().start_min - signon);
    shift.cost = shift.spreadover;
    shift.ratio = static_cast<double>(shift.work_time) / static_cast<double>(shift.spreadover);
    shift.n_pieces = static_cast<int>(shift.pieces.size());
    shift.n_spells = static_cast<int>(shift.spells.size());
}

std::optional<std::string> check_shift(const Shift& shift, const Instance& inst) {
    const Rules& r = inst.rules;
    if (shift.spells.empty()) return "shift has no spells";
    if (shift.n_spells < 1 || shift.n_spells > r.max_spells) return "spell count outside 1..max_spells";

    for (const Spell& sp : shift.spells) {
        if (sp.block_index < 0 || sp.block_index >= static_cast<int>(inst.blocks.size())) return "spell on unknown block";
        const int pieces_in_block = static_cast<int>(inst.blocks[sp.block_index].relief_opportunities.size()) - 1;
        if (sp.first_piece < 0 || sp.last_piece >= pieces_in_block || sp.first_piece > sp.last_piece) {
            return "spell piece range invalid";
        }
    }
    for (std::size_t i = 0; i + 1 < shift.spells.size(); ++i) {
        const Spell& a = shift.spells[i];
        const Spell& b = shift.spells[i + 1];
        if (b.start_min < a.end_min + r.min_break_between_spells) {
            return "break between spells shorter than the minimum";
        }
        if (a.block_index == b.block_index && b.first_piece == a.last_piece + 1) {
            return "time-adjacent spells on one block must be a single spell";
        }
    }

    Shift expect = shift;
    finalize_shift(expect, inst);
    if (expect.pieces != shift.pieces) return "piece set inconsistent with spells";
    if (expect.work_time != shift.work_time) return "work_time inconsistent with spells";
    if (expect.spreadover != shift.spreadover) return "spreadover inconsistent with spells";

    if (shift.work_time < r.min_work_time || shift.work_time > r.max_work_time) return "work_time outside rule bounds";
    if (shift.spreadover > r.max_spreadover) return "spreadover exceeds maximum";
    if (shift.ratio <= 0.0 || shift.ratio > 1.0) return "ratio outside (0,1]";
    if (shift.ratio < r.min_ratio || shift.ratio > r.max_ratio) return "ratio outside rule bounds";
    return std::nullopt;
}

} // namespace iswo
