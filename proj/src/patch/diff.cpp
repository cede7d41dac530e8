// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 fixcrew contributors

#include "fixcrew/patch/diff.hpp"

#include "fixcrew/error.hpp"
#include "fixcrew/text.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

namespace fixcrew::patch {

namespace {

enum class Op : char { Keep, Del, Ins };

// Greedy Myers over interned line ids. Beyond `kMaxD` edit steps the tail is
// emitted as delete-all/insert-all; the script stays valid, just coarser.
constexpr int kMaxD = 1024;

std::vector<int> intern_lines(const std::vector<std::string>& a, const std::vector<std::string>& b,
                              std::vector<int>& ids_b) {
    std::unordered_map<std::string_view, int> table;
    table.reserve(a.size() + b.size());
    auto intern = [&table](const std::string& s) {
        auto [it, inserted] = table.try_emplace(std::string_view(s), static_cast<int>(table.size()));
        return it->second;
    };
    std::vector<int> ids_a;
    ids_a.reserve(a.size());
    for (const auto& s : a)
        ids_a.push_back(intern(s));
    ids_b.reserve(b.size());
    for (const auto& s : b)
        ids_b.push_back(intern(s));
    return ids_a;
}

std::vector<Op> coarse_script(std::size_t n, std::size_t m) {
    std::vector<Op> ops;
    ops.reserve(n + m);
    ops.insert(ops.end(), n, Op::Del);
    ops.insert(ops.end(), m, Op::Ins);
    return ops;
}

std::vector<Op> myers_diff(const std::vector<int>& a, const std::vector<int>& b) {
    const int n = static_cast<int>(a.size());
    const int m = static_cast<int>(b.size());
    if (n == 0 || m == 0)
        return coarse_script(a.size(), b.size());

    const int max_d = std::min(n + m, kMaxD);
    const int offset = max_d;
    std::vector<int> v(static_cast<std::size_t>(2 * max_d + 1), 0);
    std::vector<std::vector<int>> trace;

    int found_d = -1;
    for (int d = 0; d <= max_d && found_d < 0; ++d) {
        trace.push_back(v);
        for (int k = -d; k <= d; k += 2) {
            int x;
            if (k == -d || (k != d && v[static_cast<std::size_t>(offset + k - 1)] <
                                          v[static_cast<std::size_t>(offset + k + 1)]))
                x = v[static_cast<std::size_t>(offset + k + 1)];
            else
                x = v[static_cast<std::size_t>(offset + k - 1)] + 1;
            int y = x - k;
            while (x < n && y < m && a[static_cast<std::size_t>(x)] == b[static_cast<std::size_t>(y)]) {
                ++x;
                ++y;
            }
            v[static_cast<std::size_t>(offset + k)] = x;
            if (x >= n && y >= m) {
                found_d = d;
                break;
            }
        }
    }
    if (found_d < 0)
        return coarse_script(a.size(), b.size());

    // Backtrack through the stored contours.
    std::vector<Op> rev;
    int x = n, y = m;
    for (int d = found_d; d > 0; --d) {
        const auto& pv = trace[static_cast<std::size_t>(d)];
        int k = x - y;
        int prev_k;
        if (k == -d || (k != d && pv[static_cast<std::size_t>(offset + k - 1)] <
                                      pv[static_cast<std::size_t>(offset + k + 1)]))
            prev_k = k + 1;
        else
            prev_k = k - 1;
        int prev_x = pv[static_cast<std::size_t>(offset + prev_k)];
        int prev_y = prev_x - prev_k;
        while (x > prev_x && y > prev_y) {
            rev.push_back(Op::Keep);
            --x;
            --y;
        }
        if (x == prev_x) {
            rev.push_back(Op::Ins);
            --y;
        } else {
            rev.push_back(Op::Del);
            --x;
        }
    }
    while (x > 0 && y > 0) {
        rev.push_back(Op::Keep);
        --x;
        --y;
    }
    while (x > 0) {
        rev.push_back(Op::Del);
        --x;
    }
    while (y > 0) {
        rev.push_back(Op::Ins);
        --y;
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
}

// Canonical order inside each changed run: deletions before insertions.
std::vector<Op> canonicalize(std::vector<Op> ops) {
    std::size_t i = 0;
    while (i < ops.size()) {
        if (ops[i] == Op::Keep) {
            ++i;
            continue;
        }
        std::size_t j = i;
        std::size_t dels = 0, inss = 0;
        while (j < ops.size() && ops[j] != Op::Keep) {
            if (ops[j] == Op::Del)
                ++dels;
            else
                ++inss;
            ++j;
        }
        std::fill(ops.begin() + static_cast<long>(i), ops.begin() + static_cast<long>(i + dels), Op::Del);
        std::fill(ops.begin() + static_cast<long>(i + dels), ops.begin() + static_cast<long>(j), Op::Ins);
        i = j;
    }
    return ops;
}

} // namespace

bool Hunk::arithmetic_consistent() const {
    long ctx = 0, del = 0, add = 0;
    for (const auto& l : lines) {
        if (l.empty())
            return false;
        switch (l[0]) {
        case ' ': ++ctx; break;
        case '-': ++del; break;
        case '+': ++add; break;
        default: return false;
        }
    }
    return old_len == ctx + del && new_len == ctx + add;
}

std::string UnifiedDiff::to_string() const {
    if (hunks.empty())
        return "";
    std::string out;
    out += "--- " + old_path + "\n";
    out += "+++ " + new_path + "\n";
    for (const auto& h : hunks) {
        out += "@@ -" + std::to_string(h.old_start) + "," + std::to_string(h.old_len) + " +" +
               std::to_string(h.new_start) + "," + std::to_string(h.new_len) + " @@\n";
        long old_line = h.old_len > 0 ? h.old_start - 1 : h.old_start; // consumed lines
        long new_line = h.new_len > 0 ? h.new_start - 1 : h.new_start;
        for (const auto& l : h.lines) {
            out += l;
            out += '\n';
            char tag = l[0];
            if (tag == ' ' || tag == '-')
                ++old_line;
            if (tag == ' ' || tag == '+')
                ++new_line;
            bool at_old_eof = (tag == ' ' || tag == '-') && old_no_newline && old_line == old_lines;
            bool at_new_eof = (tag == ' ' || tag == '+') && new_no_newline && new_line == new_lines;
            if (at_old_eof || at_new_eof)
                out += "\\ No newline at end of file\n";
        }
    }
    return out;
}

bool PatchSet::empty() const {
    for (const auto& f : files)
        if (!f.empty())
            return false;
    return true;
}

std::string PatchSet::to_string() const {
    std::string out;
    for (const auto& f : files)
        out += f.to_string();
    return out;
}

UnifiedDiff make_diff(std::string_view old_content, std::string_view new_content,
                      std::string_view old_path, std::string_view new_path, int context) {
    auto old_split = text::split_lines(old_content);
    auto new_split = text::split_lines(new_content);
    const auto& a = old_split.lines;
    const auto& b = new_split.lines;

    UnifiedDiff diff;
    diff.old_path = std::string(old_path);
    diff.new_path = std::string(new_path);
    diff.old_lines = static_cast<long>(a.size());
    diff.new_lines = static_cast<long>(b.size());
    diff.old_no_newline = !a.empty() && !old_split.trailing_newline;
    diff.new_no_newline = !b.empty() && !new_split.trailing_newline;

    std::vector<int> ids_b;
    std::vector<int> ids_a = intern_lines(a, b, ids_b);
    std::vector<Op> ops = myers_diff(ids_a, ids_b);

    // A "\ No newline" marker after a context line claims both sides end
    // there. Whenever that would be wrong, rewrite the EOF-covering Keep as
    // delete+insert so the marker lands on a side-specific line (GNU diff
    // does the same).
    if (diff.old_no_newline || diff.new_no_newline) {
        std::vector<Op> rewritten;
        rewritten.reserve(ops.size() + 2);
        long oi = 0, ni = 0;
        for (Op op : ops) {
            bool consumes = op != Op::Ins;
            bool produces = op != Op::Del;
            if (consumes)
                ++oi;
            if (produces)
                ++ni;
            if (op == Op::Keep) {
                bool old_eof = oi == diff.old_lines;
                bool new_eof = ni == diff.new_lines;
                bool marker_here = (diff.old_no_newline && old_eof) || (diff.new_no_newline && new_eof);
                bool marker_exact =
                    diff.old_no_newline && diff.new_no_newline && old_eof && new_eof;
                if (marker_here && !marker_exact) {
                    rewritten.push_back(Op::Del);
                    rewritten.push_back(Op::Ins);
                    continue;
                }
            }
            rewritten.push_back(op);
        }
        ops = std::move(rewritten);
    }
    ops = canonicalize(ops);

    if (std::none_of(ops.begin(), ops.end(), [](Op o) { return o != Op::Keep; }))
        return diff; // no change

    // Positions of changed ops in (old,new) coordinates.
    struct Region {
        long old_begin, old_end; // [begin,end) in old, 0-based
        std::size_t op_begin, op_end;
    };
    std::vector<Region> regions;
    {
        long oi = 0;
        std::size_t k = 0;
        while (k < ops.size()) {
            if (ops[k] == Op::Keep) {
                ++oi;
                ++k;
                continue;
            }
            Region r;
            r.op_begin = k;
            r.old_begin = oi;
            while (k < ops.size() && ops[k] != Op::Keep) {
                if (ops[k] == Op::Del)
                    ++oi;
                ++k;
            }
            r.op_end = k;
            r.old_end = oi;
            regions.push_back(r);
        }
    }

    // Merge regions whose context windows touch or overlap.
    struct Group {
        long old_begin, old_end;
        std::size_t op_begin, op_end;
    };
    std::vector<Group> groups;
    for (const auto& r : regions) {
        long want_begin = std::max<long>(0, r.old_begin - context);
        if (!groups.empty() && want_begin <= groups.back().old_end) {
            groups.back().old_end = std::min<long>(diff.old_lines, r.old_end + context);
            groups.back().op_end = r.op_end;
        } else {
            Group g;
            g.old_begin = want_begin;
            g.old_end = std::min<long>(diff.old_lines, r.old_end + context);
            g.op_begin = r.op_begin;
            g.op_end = r.op_end;
            groups.push_back(g);
        }
    }

    // Walk the op stream once more to emit hunk lines per group.
    std::size_t gi = 0;
    long oi = 0, ni = 0;
    Hunk* hunk = nullptr;
    auto open_hunk_if_needed = [&](long old_pos, long new_pos) {
        if (gi >= groups.size() || hunk)
            return;
        if (old_pos >= groups[gi].old_begin) {
            diff.hunks.emplace_back();
            hunk = &diff.hunks.back();
            hunk->old_start = old_pos; // provisional: 0-based count before the hunk
            hunk->new_start = new_pos;
        }
    };
    auto close_hunk_if_done = [&](long old_pos) {
        if (!hunk)
            return;
        if (old_pos >= groups[gi].old_end) {
            ++gi;
            hunk = nullptr;
        }
    };
    for (std::size_t k = 0; k < ops.size(); ++k) {
        open_hunk_if_needed(oi, ni);
        switch (ops[k]) {
        case Op::Keep:
            if (hunk)
                hunk->lines.push_back(" " + a[static_cast<std::size_t>(oi)]);
            ++oi;
            ++ni;
            break;
        case Op::Del:
            if (hunk)
                hunk->lines.push_back("-" + a[static_cast<std::size_t>(oi)]);
            ++oi;
            break;
        case Op::Ins:
            if (hunk)
                hunk->lines.push_back("+" + b[static_cast<std::size_t>(ni)]);
            ++ni;
            break;
        }
        // A hunk only closes on old-side progress past its group, and never
        // in the middle of a changed run.
        if (hunk && (k + 1 >= ops.size() || ops[k + 1] == Op::Keep))
            close_hunk_if_done(oi);
    }
    if (hunk) // group that extends to EOF
        ++gi;

    // Fix up start/len fields from the emitted lines.
    long old_cursor = 0, new_cursor = 0;
    std::size_t hunk_idx = 0;
    (void)old_cursor;
    (void)new_cursor;
    for (auto& h : diff.hunks) {
        long ctx = 0, del = 0, add = 0;
        for (const auto& l : h.lines) {
            if (l[0] == ' ')
                ++ctx;
            else if (l[0] == '-')
                ++del;
            else
                ++add;
        }
        h.old_len = ctx + del;
        h.new_len = ctx + add;
        // old_start/new_start currently hold the 0-based count of preceding
        // lines; unified headers are 1-based when the length is non-zero.
        if (h.old_len > 0)
            h.old_start += 1;
        if (h.new_len > 0)
            h.new_start += 1;
        ++hunk_idx;
    }
    return diff;
}

UnifiedDiff render_unified_diff(std::string_view old_content, std::string_view new_content,
                                std::string_view path, int context) {
    return make_diff(old_content, new_content, path, path, context);
}

std::string apply_unified_diff(std::string_view old_content, const UnifiedDiff& diff) {
    auto old_split = text::split_lines(old_content);
    const auto& a = old_split.lines;
    const long old_total = static_cast<long>(a.size());

    if (diff.hunks.empty())
        return std::string(old_content);

    std::vector<std::string> out;
    long cursor = 0; // 0-based next old line to copy

    for (const auto& h : diff.hunks) {
        if (!h.arithmetic_consistent())
            throw Error(ErrorCode::DiffApplyFailure, "hunk header disagrees with its lines");
        long begin = h.old_len > 0 ? h.old_start - 1 : h.old_start;
        if (begin < cursor)
            throw Error(ErrorCode::DiffApplyFailure, "hunks overlap or are out of order");
        if (begin > old_total)
            throw Error(ErrorCode::DiffApplyFailure, "hunk starts past end of file");
        while (cursor < begin)
            out.push_back(a[static_cast<std::size_t>(cursor++)]);
        for (const auto& l : h.lines) {
            std::string_view body = std::string_view(l).substr(1);
            switch (l[0]) {
            case ' ':
            case '-':
                if (cursor >= old_total)
                    throw Error(ErrorCode::DiffApplyFailure, "hunk runs past end of file");
                if (a[static_cast<std::size_t>(cursor)] != body)
                    throw Error(ErrorCode::DiffApplyFailure,
                                "context mismatch at line " + std::to_string(cursor + 1) + ": expected \"" +
                                    std::string(body) + "\", found \"" + a[static_cast<std::size_t>(cursor)] +
                                    "\"");
                if (l[0] == ' ')
                    out.push_back(std::string(body));
                ++cursor;
                break;
            case '+':
                out.push_back(std::string(body));
                break;
            default:
                throw Error(ErrorCode::DiffApplyFailure, "bad hunk line prefix");
            }
        }
    }

    bool touched_eof = cursor >= old_total;
    if (touched_eof && diff.old_no_newline && old_split.trailing_newline && old_total > 0)
        throw Error(ErrorCode::DiffApplyFailure, "old content ends with a newline, diff says it must not");
    if (touched_eof && !diff.old_no_newline && !old_split.trailing_newline && old_total > 0)
        throw Error(ErrorCode::DiffApplyFailure, "old content lacks the trailing newline the diff expects");

    while (cursor < old_total)
        out.push_back(a[static_cast<std::size_t>(cursor++)]);

    bool trailing;
    if (!touched_eof)
        trailing = old_split.trailing_newline;
    else
        trailing = !diff.new_no_newline;
    return text::join_lines(out, trailing);
}

namespace {

std::string strip_diff_path(std::string_view raw) {
    // Cut a trailing tab-separated timestamp, then git-style prefixes.
    std::size_t tab = raw.find('\t');
    if (tab != std::string_view::npos)
        raw = raw.substr(0, tab);
    raw = text::trim(raw);
    if (raw != "/dev/null" && (text::starts_with(raw, "a/") || text::starts_with(raw, "b/")))
        raw = raw.substr(2);
    return std::string(raw);
}

bool parse_range(std::string_view s, long& start, long& len) {
    // "a,b" or "a" (len defaults to 1)
    std::size_t comma = s.find(',');
    std::string_view s_start = comma == std::string_view::npos ? s : s.substr(0, comma);
    std::string_view s_len = comma == std::string_view::npos ? "" : s.substr(comma + 1);
    if (s_start.empty())
        return false;
    start = 0;
    for (char c : s_start) {
        if (c < '0' || c > '9')
            return false;
        start = start * 10 + (c - '0');
    }
    if (comma == std::string_view::npos) {
        len = 1;
        return true;
    }
    if (s_len.empty())
        return false;
    len = 0;
    for (char c : s_len) {
        if (c < '0' || c > '9')
            return false;
        len = len * 10 + (c - '0');
    }
    return true;
}

} // namespace

PatchSet parse_patch(std::string_view input) {
    PatchSet set;
    auto split = text::split_lines(input);
    const auto& lines = split.lines;

    UnifiedDiff* current = nullptr;
    Hunk* hunk = nullptr;
    long old_remaining = 0, new_remaining = 0;
    char last_tag = 0;

    auto finish_hunk = [&]() {
        if (hunk && (old_remaining != 0 || new_remaining != 0))
            throw Error(ErrorCode::MalformedDiff, "hunk shorter than its header declares");
        hunk = nullptr;
    };

    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string& line = lines[i];
        if (hunk) {
            if (text::starts_with(line, "\\")) { // "\ No newline at end of file"
                if (!current || hunk->lines.empty())
                    throw Error(ErrorCode::MalformedDiff, "misplaced end-of-file marker");
                if (last_tag == '-' || last_tag == ' ')
                    current->old_no_newline = true;
                if (last_tag == '+' || last_tag == ' ')
                    current->new_no_newline = true;
                continue;
            }
            if (old_remaining > 0 || new_remaining > 0) {
                std::string body = line;
                if (body.empty())
                    body = " "; // tolerates stripped trailing whitespace on context lines
                char tag = body[0];
                if (tag != ' ' && tag != '-' && tag != '+')
                    throw Error(ErrorCode::MalformedDiff,
                                "unexpected line inside hunk at input line " + std::to_string(i + 1));
                if ((tag == ' ' || tag == '-') && --old_remaining < 0)
                    throw Error(ErrorCode::MalformedDiff, "hunk longer than its header declares");
                if ((tag == ' ' || tag == '+') && --new_remaining < 0)
                    throw Error(ErrorCode::MalformedDiff, "hunk longer than its header declares");
                hunk->lines.push_back(body);
                last_tag = tag;
                continue;
            }
        }
        finish_hunk();

        if (text::starts_with(line, "--- ")) {
            if (i + 1 >= lines.size() || !text::starts_with(lines[i + 1], "+++ "))
                throw Error(ErrorCode::MalformedDiff, "'---' header without '+++' partner");
            set.files.emplace_back();
            current = &set.files.back();
            current->old_path = strip_diff_path(std::string_view(line).substr(4));
            current->new_path = strip_diff_path(std::string_view(lines[i + 1]).substr(4));
            ++i;
            continue;
        }
        if (text::starts_with(line, "@@ ")) {
            if (!current)
                throw Error(ErrorCode::MalformedDiff, "hunk before any file header");
            std::string_view rest = std::string_view(line).substr(3);
            std::size_t at = rest.find(" @@");
            if (at == std::string_view::npos)
                throw Error(ErrorCode::MalformedDiff, "bad hunk header: " + line);
            rest = rest.substr(0, at);
            std::size_t space = rest.find(' ');
            if (space == std::string_view::npos || rest.empty() || rest[0] != '-' ||
                space + 1 >= rest.size() || rest[space + 1] != '+')
                throw Error(ErrorCode::MalformedDiff, "bad hunk header: " + line);
            current->hunks.emplace_back();
            hunk = &current->hunks.back();
            if (!parse_range(rest.substr(1, space - 1), hunk->old_start, hunk->old_len) ||
                !parse_range(rest.substr(space + 2), hunk->new_start, hunk->new_len))
                throw Error(ErrorCode::MalformedDiff, "bad hunk header: " + line);
            old_remaining = hunk->old_len;
            new_remaining = hunk->new_len;
            last_tag = 0;
            continue;
        }
        // Anything else (git headers, index lines, prose) is skipped.
    }
    finish_hunk();

    for (auto& f : set.files) {
        if (!f.hunks.empty()) {
            const Hunk& last = f.hunks.back();
            f.old_lines = last.old_len > 0 ? last.old_start + last.old_len - 1 : last.old_start;
            f.new_lines = last.new_len > 0 ? last.new_start + last.new_len - 1 : last.new_start;
        }
    }
    return set;
}

UnifiedDiff parse_unified_diff(std::string_view input) {
    PatchSet set = parse_patch(input);
    if (set.files.size() != 1)
        throw Error(ErrorCode::MalformedDiff,
                    "expected exactly one file diff, found " + std::to_string(set.files.size()));
    return set.files.front();
}

} // namespace fixcrew::patch
