#include "bibnet/generator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

#include "bibnet/error.hpp"

namespace bibnet {

namespace {

// Thin wrapper over mt19937_64 that avoids std::*_distribution, whose output
// is implementation-defined; this keeps generated corpora bit-identical.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double next_double() { // [0, 1)
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    std::size_t uniform_index(std::size_t n) {
        return static_cast<std::size_t>(next_double() * static_cast<double>(n));
    }

    // cumulative must be non-empty with a positive total
    std::size_t pick_cumulative(const std::vector<double>& cumulative) {
        double x = next_double() * cumulative.back();
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), x);
        if (it == cumulative.end())
            --it;
        return static_cast<std::size_t>(it - cumulative.begin());
    }

private:
    std::mt19937_64 eng_;
};

const double kTeamSizeWeights[] = {0.62, 0.23, 0.09, 0.04, 0.015, 0.005}; // sizes 2..7

std::size_t pick_team_size(Rng& rng) {
    static const std::vector<double> cum = [] {
        std::vector<double> c;
        double total = 0;
        for (double w : kTeamSizeWeights)
            c.push_back(total += w);
        return c;
    }();
    return 2 + rng.pick_cumulative(cum);
}

const char* kAffiliationPool[] = {
    "UNLP", "UBA",  "UNC",  "UNS",  "UNT",  "UNCu", "UCEMA", "UDESA",
    "UTDT", "BCRA", "Foreign University", "Research Center",
    "State Entity", "Bank", "International Entity"};
const double kAffiliationWeights[] = {10, 9, 7, 6, 5, 4, 5, 4, 3, 4, 6, 6, 4, 3, 2};

double interpolate_schedule(const std::vector<ScheduleAnchor>& schedule, int year) {
    if (year <= schedule.front().year)
        return schedule.front().coauthor_prob;
    if (year >= schedule.back().year)
        return schedule.back().coauthor_prob;
    for (std::size_t i = 1; i < schedule.size(); ++i) {
        if (year <= schedule[i].year) {
            const auto& a = schedule[i - 1];
            const auto& b = schedule[i];
            double t = static_cast<double>(year - a.year) /
                       static_cast<double>(b.year - a.year);
            return a.coauthor_prob + t * (b.coauthor_prob - a.coauthor_prob);
        }
    }
    return schedule.back().coauthor_prob;
}

void validate_schedule(const std::vector<ScheduleAnchor>& schedule) {
    if (schedule.empty())
        throw DataError("schedule must have at least one anchor");
    for (std::size_t i = 0; i < schedule.size(); ++i) {
        if (schedule[i].coauthor_prob < 0.0 || schedule[i].coauthor_prob > 1.0)
            throw DataError("schedule probability outside [0,1]");
        if (i > 0 && schedule[i].year <= schedule[i - 1].year)
            throw DataError("schedule years must be strictly increasing");
    }
}

} // namespace

std::vector<std::pair<char, double>> GeneratorConfig::default_jel_weights() {
    return {{'A', 1}, {'B', 2}, {'C', 10}, {'D', 8}, {'E', 8}, {'F', 7}, {'G', 4},
            {'H', 6}, {'I', 6}, {'J', 6},  {'K', 2}, {'L', 4}, {'M', 1}, {'N', 2},
            {'O', 5}, {'P', 1}, {'Q', 4},  {'R', 3}, {'Z', 1}};
}

std::vector<ScheduleAnchor> parse_schedule(const std::string& text) {
    std::vector<ScheduleAnchor> anchors;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw DataError("schedule anchor must be YEAR:PROB, got: " + item);
        try {
            ScheduleAnchor a;
            a.year = std::stoi(item.substr(0, colon));
            a.coauthor_prob = std::stod(item.substr(colon + 1));
            anchors.push_back(a);
        } catch (const std::exception&) {
            throw DataError("invalid schedule anchor: " + item);
        }
    }
    validate_schedule(anchors);
    return anchors;
}

Corpus generate_corpus(const GeneratorConfig& config) {
    if (config.n_authors < 2)
        throw DataError("generator needs at least 2 authors");
    validate_schedule(config.schedule);
    if (config.attach_bias < 0.0)
        throw DataError("attach_bias must be >= 0");

    Rng rng(config.seed);
    Corpus corpus;

    // author pool, created up-front so selection probabilities are stable
    std::vector<std::string> names(config.n_authors);
    std::vector<double> aff_cum;
    {
        double total = 0;
        for (double w : kAffiliationWeights)
            aff_cum.push_back(total += w);
    }
    for (std::size_t i = 0; i < config.n_authors; ++i) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "Author %04zu", i + 1);
        names[i] = buf;
        AuthorRecord& rec = corpus.upsert_author(names[i]);
        rec.affiliation = kAffiliationPool[rng.pick_cumulative(aff_cum)];
        double g = rng.next_double();
        rec.gender = g < 0.33 ? Gender::Female : (g < 0.88 ? Gender::Male : Gender::Unknown);
    }

    std::vector<double> jel_cum;
    {
        double total = 0;
        for (const auto& [letter, w] : config.jel_letter_weights)
            jel_cum.push_back(total += w);
    }
    auto pick_jel = [&] {
        char letter = config.jel_letter_weights[rng.pick_cumulative(jel_cum)].first;
        int digit = static_cast<int>(rng.uniform_index(10));
        return std::string(1, letter) + std::to_string(digit);
    };

    const int year_lo = config.schedule.front().year;
    const int year_hi = config.schedule.back().year;
    const int span = year_hi - year_lo + 1;

    std::vector<std::size_t> papers_by_author(config.n_authors, 0);
    std::vector<double> weight_cum(config.n_authors);

    for (std::size_t p = 0; p < config.n_papers; ++p) {
        PaperEntry entry;
        char idbuf[32];
        std::snprintf(idbuf, sizeof(idbuf), "sim%05zu", p + 1);
        entry.id = idbuf;
        entry.year = year_lo + static_cast<int>((p * static_cast<std::size_t>(span)) /
                                                config.n_papers);
        entry.title = "Simulated contribution " + std::to_string(p + 1);

        bool coauthored = rng.next_double() < interpolate_schedule(config.schedule, entry.year);
        std::size_t team = coauthored ? std::min(pick_team_size(rng), config.n_authors)
                                      : std::size_t{1};

        double total = 0;
        for (std::size_t i = 0; i < config.n_authors; ++i) {
            double w = std::pow(static_cast<double>(papers_by_author[i] + 1),
                                config.attach_bias);
            weight_cum[i] = total += w;
        }
        std::vector<std::size_t> members;
        while (members.size() < team) {
            std::size_t cand = rng.pick_cumulative(weight_cum);
            if (std::find(members.begin(), members.end(), cand) == members.end())
                members.push_back(cand);
        }
        for (std::size_t m : members) {
            entry.authors.push_back(names[m]);
            ++papers_by_author[m];
        }

        entry.jel.push_back(pick_jel());
        if (rng.next_double() < 0.75)
            entry.jel.push_back(pick_jel());

        corpus.entries.push_back(std::move(entry));
    }
    return corpus;
}

} // namespace bibnet
