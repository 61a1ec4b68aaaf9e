#pragma once

#include <random>
#include <string>
#include <vector>

#include "wssim/collection.hpp"
#include "wssim/graph.hpp"

namespace wssim::testing {

inline Operation make_op(std::string id, std::initializer_list<std::string_view> inputs,
                         std::initializer_list<std::string_view> outputs, std::string name = {}) {
    Operation op;
    op.name = name.empty() ? id : std::move(name);
    op.id = std::move(id);
    op.service = "fixture";
    op.inputs = make_parameter_set(inputs);
    op.outputs = make_parameter_set(outputs);
    return op;
}

/// The six city/weather operations.
inline Collection city_weather() {
    return Collection({
                          make_op("o1", {"ZIP"}, {"CITYNAME"}, "get_CITYNAMEbyZIP"),
                          make_op("o2", {"ZIP", "GEOGRAPHICALREGION"}, {"CITYNAME"},
                                  "get_CITYNAMEbyZIPGEOGRAPHICALREGION"),
                          make_op("o3", {"ZIP"}, {"CITYNAME", "LONGITUDE", "LATITUDE", "ALTITUDE"},
                                  "get_GEOGRAPHICALLOCATIONbyZIP"),
                          make_op("o4", {"ZIP"}, {"WEATHERREPORT"}, "get_WEATHERbyZIP"),
                          make_op("o5", {"CITYNAME"}, {"WEATHERREPORT"}, "get_WEATHERbyCITYNAME"),
                          make_op("o6", {"CITYNAME"}, {"WEATHERREPORT", "SUBSCRIPTION"},
                                  "get_WEATHERWEATHERREPORTSUBSCRbyCITYNAME"),
                      },
                      "city_weather");
}

/// Four operations returning SKILLEDOCCUPATION, all sharing the COUNTRY input.
inline Collection skilled_occupation() {
    return Collection({
                          make_op("s1", {"CITY", "COUNTRY"}, {"SKILLEDOCCUPATION"}),
                          make_op("s2", {"COUNTRY"}, {"SKILLEDOCCUPATION"}),
                          make_op("s3", {"COUNTRY", "PUBLICCOMPANY"}, {"SKILLEDOCCUPATION"}),
                          make_op("s4", {"COUNTRY", "COMPANY"}, {"SKILLEDOCCUPATION"}),
                      },
                      "skilled");
}

/// Random parameter set over names P0..P{vocabulary-1}; sizes 0..max_size.
inline ParameterSet random_names(std::mt19937_64& rng, std::size_t vocabulary, std::size_t max_size) {
    std::uniform_int_distribution<std::size_t> size_dist(0, max_size);
    std::uniform_int_distribution<std::size_t> name_dist(0, vocabulary - 1);
    ParameterSet set;
    const auto size = size_dist(rng);
    for (std::size_t i = 0; i < size; ++i) set.emplace("P" + std::to_string(name_dist(rng)));
    return set;
}

/// Random collection. A small vocabulary and small sets make every relation
/// appear often; a fraction of operations copy an earlier output set.
inline Collection random_collection(std::mt19937_64& rng, std::size_t size, std::size_t vocabulary = 30,
                                    std::size_t max_set = 4) {
    std::vector<Operation> ops;
    std::bernoulli_distribution reuse(0.5);
    for (std::size_t i = 0; i < size; ++i) {
        Operation op;
        op.id = "r" + std::to_string(i);
        op.name = "op" + std::to_string(i);
        op.service = "svc" + std::to_string(i % 7);
        op.inputs = random_names(rng, vocabulary, max_set);
        if (!ops.empty() && reuse(rng)) {
            std::uniform_int_distribution<std::size_t> pick(0, ops.size() - 1);
            op.outputs = ops[pick(rng)].outputs;
            if (reuse(rng)) op.outputs.merge(random_names(rng, vocabulary, 1));
        } else {
            op.outputs = random_names(rng, vocabulary, max_set);
        }
        ops.push_back(std::move(op));
    }
    return Collection(std::move(ops), "random");
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t nodes, double density, bool directed) {
    std::bernoulli_distribution coin(density);
    std::vector<Link> links;
    for (NodeIndex a = 0; a < nodes; ++a)
        for (NodeIndex b = 0; b < nodes; ++b)
            if (a != b && (directed || a < b) && coin(rng)) links.push_back({a, b});
    return Graph(nodes, directed, std::move(links));
}

inline Graph complete_graph(std::size_t nodes) {
    std::vector<Link> links;
    for (NodeIndex a = 0; a < nodes; ++a)
        for (NodeIndex b = a + 1; b < nodes; ++b) links.push_back({a, b});
    return Graph(nodes, false, std::move(links));
}

}  // namespace wssim::testing
