#include "entropia/game.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <unordered_set>

#include "entropia/compensated_sum.hpp"
#include "entropia/error.hpp"
#include "entropia/rng.hpp"

namespace entropia::game {

namespace {

Distribution distribution_of(const std::vector<AlphabetEntry>& entries) {
    if (entries.empty()) throw DomainError("alphabet has no entries");
    std::vector<std::string> labels;
    std::vector<double> weights;
    std::unordered_set<std::string> seen;
    for (const auto& e : entries) {
        if (!(e.weight > 0.0)) throw DomainError("weight of '" + e.label + "' must be positive");
        if (!seen.insert(e.label).second) throw DomainError("duplicate alphabet label '" + e.label + "'");
        labels.push_back(e.label);
        weights.push_back(e.weight);
    }
    return Distribution::from_weights(std::move(labels), weights);
}

}  // namespace

Deck::Deck(std::vector<AlphabetEntry> entries)
    : entries_(std::move(entries)), dist_(distribution_of(entries_)), code_(huffman_build(dist_)) {
    const auto expected = expected_code_length(code_.book);
    entropy_bits_ = expected.entropy;
    expected_questions_ = expected.length;
}

Deck load_alphabet(std::istream& csv) {
    // Parsed as a distribution file, but keeping the raw weights so that
    // non-positive ones are rejected rather than normalised away.
    std::string line;
    if (!std::getline(csv, line)) throw DomainError("alphabet CSV is empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "symbol,weight" && line != "label,weight")
        throw DomainError("alphabet CSV must start with header 'symbol,weight'");
    std::vector<AlphabetEntry> entries;
    std::size_t lineno = 1;
    while (std::getline(csv, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        const auto comma = line.rfind(',');
        if (comma == std::string::npos) throw DomainError("alphabet line " + std::to_string(lineno) + ": expected 'label,weight'");
        AlphabetEntry e;
        e.label = line.substr(0, comma);
        const auto field = line.substr(comma + 1);
        std::size_t used = 0;
        try {
            e.weight = std::stod(field, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0) throw DomainError("alphabet line " + std::to_string(lineno) + ": bad weight '" + field + "'");
        entries.push_back(std::move(e));
    }
    return Deck(std::move(entries));
}

Deck load_alphabet(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open alphabet file " + path.string());
    return load_alphabet(in);
}

GameSession start_session(const Deck& deck, std::string id) {
    GameSession s;
    s.id = std::move(id);
    s.node = deck.tree().root();
    return s;
}

QuestionView current_question(const Deck& deck, const GameSession& session, std::size_t sample) {
    if (session.finished) throw StateError("session " + session.id + " is finished");
    const auto& tree = deck.tree();
    const auto& node = tree.node(session.node);
    QuestionView q;
    auto side = [&](std::int32_t child, std::vector<std::string>& labels, std::size_t& count) -> double {
        if (child == HuffmanTree::kNone) return 0.0;
        const auto leaves = tree.leaves_under(child);
        count = leaves.size();
        for (std::size_t i = 0; i < leaves.size() && i < sample; ++i)
            labels.push_back(deck.distribution().label(static_cast<std::size_t>(leaves[i])));
        return tree.node(child).prob;
    };
    const double no = side(node.left, q.no_labels, q.no_count);
    const double yes = side(node.right, q.yes_labels, q.yes_count);
    const double total = no + yes;
    q.p_no = total > 0.0 ? no / total : 0.0;
    q.p_yes = total > 0.0 ? yes / total : 0.0;
    q.pending_bits = binary_entropy(q.p_no);
    return q;
}

GameSession answer(const Deck& deck, GameSession session, int bit) {
    if (session.finished) throw StateError("session " + session.id + " is finished");
    if (bit != 0 && bit != 1) throw DomainError("answer bit must be 0 or 1");
    const auto& node = deck.tree().node(session.node);
    const auto next = bit ? node.right : node.left;
    if (next == HuffmanTree::kNone) throw DomainError("no branch for answer " + std::to_string(bit) + " here");
    session.node = next;
    session.transcript.push_back(bit ? '1' : '0');
    ++session.asked;
    const auto& reached = deck.tree().node(next);
    if (reached.is_leaf()) {
        session.finished = true;
        session.answer_label = deck.distribution().label(static_cast<std::size_t>(reached.symbol));
    }
    return session;
}

GameSession replay(const Deck& deck, std::string id, const std::string& transcript) {
    auto s = start_session(deck, std::move(id));
    for (char c : transcript) {
        if (c != '0' && c != '1') throw DomainError("transcript must be binary");
        s = answer(deck, std::move(s), c - '0');
    }
    return s;
}

ExperimentReport simulate_plays(const Deck& deck, std::uint64_t m, std::uint64_t seed) {
    if (m < 1) throw DomainError("simulate_plays needs m >= 1");
    const auto& dist = deck.distribution();
    std::vector<double> cumulative(dist.size());
    CompensatedSum acc;
    for (std::size_t i = 0; i < dist.size(); ++i) {
        acc += dist.prob(i);
        cumulative[i] = acc.value();
    }
    Rng rng(seed);
    std::uint64_t questions = 0;
    for (std::uint64_t play = 0; play < m; ++play) {
        auto idx = static_cast<std::size_t>(std::upper_bound(cumulative.begin(), cumulative.end(), rng.uniform()) -
                                            cumulative.begin());
        if (idx == dist.size()) idx = dist.size() - 1;
        // the opponent answers truthfully, i.e. with the target's codeword
        auto s = start_session(deck, "sim");
        for (char c : deck.book().code(idx)) s = answer(deck, std::move(s), c - '0');
        questions += s.asked;
    }
    const double mean = static_cast<double>(questions) / static_cast<double>(m);
    ExperimentReport r;
    r.name = "game_simulation";
    r.n_limit = m;
    r.scalars["mean_questions"] = mean;
    r.scalars["entropy_bits"] = deck.entropy_bits();
    r.scalars["expected_questions"] = deck.expected_questions();
    r.scalars["plays"] = static_cast<double>(m);
    const auto expected = expected_code_length(deck.book());
    r.checks["entropy_bound"] = expected.within_bound;
    r.checks["rate_consistent"] =
        std::abs(mean - expected.length) <= kRateSigmas * expected.stddev / std::sqrt(static_cast<double>(m));
    return r;
}

SessionStore::SessionStore(const Deck& deck, std::chrono::seconds ttl, std::uint64_t seed)
    : deck_(deck), ttl_(ttl), ids_(seed) {}

GameSession SessionStore::create() {
    std::lock_guard lock(mutex_);
    const auto now = Clock::now();
    // full sweeps are rationed; lookups already reject expired sessions
    if (now - last_sweep_ >= std::min<Clock::duration>(ttl_, std::chrono::minutes(1))) {
        sweep(now);
        last_sweep_ = now;
    }
    std::string id;
    do {
        char buf[33];
        std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(ids_()),
                      static_cast<unsigned long long>(ids_()));
        id = buf;
    } while (slots_.contains(id));
    auto slot = std::make_shared<Slot>();
    slot->session = start_session(deck_, id);
    slot->touched = now;
    slots_.emplace(id, slot);
    return slot->session;
}

std::shared_ptr<SessionStore::Slot> SessionStore::find(const std::string& id) {
    std::lock_guard lock(mutex_);
    auto it = slots_.find(id);
    if (it == slots_.end()) return nullptr;
    if (Clock::now() - it->second->touched > ttl_) {
        slots_.erase(it);
        return nullptr;
    }
    it->second->touched = Clock::now();
    return it->second;
}

std::optional<GameSession> SessionStore::get(const std::string& id) {
    auto slot = find(id);
    if (!slot) return std::nullopt;
    std::lock_guard lock(slot->mutex);
    return slot->session;
}

std::optional<QuestionView> SessionStore::question(const std::string& id, std::size_t sample) {
    auto slot = find(id);
    if (!slot) return std::nullopt;
    std::lock_guard lock(slot->mutex);
    return current_question(deck_, slot->session, sample);
}

std::optional<GameSession> SessionStore::answer(const std::string& id, int bit) {
    auto slot = find(id);
    if (!slot) return std::nullopt;
    std::lock_guard lock(slot->mutex);
    slot->session = game::answer(deck_, slot->session, bit);
    return slot->session;
}

std::size_t SessionStore::size() {
    std::lock_guard lock(mutex_);
    return slots_.size();
}

void SessionStore::evict_expired(Clock::time_point now) {
    std::lock_guard lock(mutex_);
    sweep(now);
}

void SessionStore::sweep(Clock::time_point now) {
    std::erase_if(slots_, [&](const auto& kv) { return now - kv.second->touched > ttl_; });
}

}  // namespace entropia::game
