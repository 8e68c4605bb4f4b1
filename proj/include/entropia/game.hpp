// game.hpp
// Twenty-questions over a Huffman tree: each yes/no answer follows one edge
// (no = 0 = left, yes = 1 = right); reaching a leaf reveals the concept.
#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "entropia/distribution.hpp"
#include "entropia/huffman.hpp"
#include "entropia/report.hpp"

namespace entropia::game {

struct AlphabetEntry {
    std::string label;
    double weight = 0.0;
};

/// A loaded alphabet: entries, their distribution, Huffman tree and codebook.
class Deck {
public:
    /// DomainError on no entries, duplicate labels or non-positive weights.
    explicit Deck(std::vector<AlphabetEntry> entries);

    const std::vector<AlphabetEntry>& entries() const { return entries_; }
    const Distribution& distribution() const { return dist_; }
    const HuffmanTree& tree() const { return code_.tree; }
    const CodeBook& book() const { return code_.book; }
    double entropy_bits() const { return entropy_bits_; }
    double expected_questions() const { return expected_questions_; }

private:
    std::vector<AlphabetEntry> entries_;
    Distribution dist_;
    HuffmanCode code_;
    double entropy_bits_;
    double expected_questions_;
};

/// CSV with header `symbol,weight` or `label,weight`.
Deck load_alphabet(std::istream& csv);
Deck load_alphabet(const std::filesystem::path& path);

struct GameSession {
    std::string id;
    std::int32_t node = 0;
    std::uint32_t asked = 0;
    std::string transcript;  // '0' / '1' per answer
    bool finished = false;
    std::optional<std::string> answer_label;
};

struct QuestionView {
    std::vector<std::string> no_labels;   // leaves reachable under answer 0
    std::vector<std::string> yes_labels;  // leaves reachable under answer 1
    std::size_t no_count = 0;
    std::size_t yes_count = 0;
    double p_no = 0.0;   // conditional on the current node
    double p_yes = 0.0;
    double pending_bits = 0.0;  // binary entropy of (p_no, p_yes)
};

GameSession start_session(const Deck& deck, std::string id);

/// StateError on a finished session. Label lists are capped at `sample`.
QuestionView current_question(const Deck& deck, const GameSession& session, std::size_t sample = 8);

/// Pure transition. StateError if finished, DomainError on bit not in {0, 1}
/// or on a branch that does not exist (the "1" side of a one-symbol tree).
GameSession answer(const Deck& deck, GameSession session, int bit);

/// Replays a transcript from the root.
GameSession replay(const Deck& deck, std::string id, const std::string& transcript);

/// Samples m targets from the deck's distribution (seeded), plays each to
/// its leaf. Report "game_simulation": scalars mean_questions, entropy_bits,
/// expected_questions, plays; check entropy_bound (H <= mean < H + 1).
ExperimentReport simulate_plays(const Deck& deck, std::uint64_t m, std::uint64_t seed);

/// Thread-safe in-memory session map with idle-time eviction. Mutations of
/// one session are serialised; distinct sessions proceed concurrently.
class SessionStore {
public:
    using Clock = std::chrono::steady_clock;

    explicit SessionStore(const Deck& deck, std::chrono::seconds ttl = std::chrono::minutes(30),
                          std::uint64_t seed = std::random_device{}());

    GameSession create();
    /// std::nullopt if unknown or expired.
    std::optional<GameSession> get(const std::string& id);
    std::optional<QuestionView> question(const std::string& id, std::size_t sample = 8);
    std::optional<GameSession> answer(const std::string& id, int bit);

    std::size_t size();
    /// Drops sessions idle for longer than the TTL as of `now`.
    void evict_expired(Clock::time_point now = Clock::now());

private:
    struct Slot {
        std::mutex mutex;
        GameSession session;
        Clock::time_point touched;  // guarded by the store mutex
    };
    std::shared_ptr<Slot> find(const std::string& id);
    void sweep(Clock::time_point now);  // caller holds mutex_

    const Deck& deck_;
    std::chrono::seconds ttl_;
    std::mutex mutex_;
    std::unordered_map<std::string, std::shared_ptr<Slot>> slots_;
    std::mt19937_64 ids_;
    Clock::time_point last_sweep_{};
};

}  // namespace entropia::game
