#pragma once

/*
 * On-disk format and named decorations for a groupoid.
 *
 * A .gpd file is a line-oriented description: atoms with weights, named
 * non-unit arrows with endpoints, inverse pairs, composition triples, and
 * optional named arrow or atom sets. Unit arrows share the label of their
 * atom, so a composition result may name either kind. Serialization
 * preserves construction order; parsing a serialized document reproduces
 * the document exactly.
 */

#include <gpd/groupoid.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gpd {

struct GroupoidDocument {
    FiniteGroupoid g;
    std::vector<std::pair<std::string, ArrowSet>> arrow_sets;
    std::vector<std::pair<std::string, std::vector<int>>> atom_sets;

    const ArrowSet* find_arrow_set(const std::string& name) const;
    friend bool operator==(const GroupoidDocument&, const GroupoidDocument&) = default;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

GroupoidDocument parse_document(const std::string& text);
std::string serialize_document(const GroupoidDocument& doc);

GroupoidDocument load_document(const std::string& path);
void save_document(const GroupoidDocument& doc, const std::string& path);

/* FNV-1a over the serialized form; identifies an instance in reports. */
std::uint64_t document_digest(const GroupoidDocument& doc);
std::string digest_hex(std::uint64_t digest);

}  // namespace gpd
