#include "shs/apps/clustering.hpp"

namespace shs::apps {

// Fisher (1936) iris measurements, (sepal length, petal width) columns.
const std::vector<std::vector<double>>& iris_sepal_length_petal_width() {
    static const std::vector<std::vector<double>> data = {
        {5.1, 0.2}, {4.9, 0.2}, {4.7, 0.2}, {4.6, 0.2}, {5.0, 0.2}, {5.4, 0.4},
        {4.6, 0.3}, {5.0, 0.2}, {4.4, 0.2}, {4.9, 0.1}, {5.4, 0.2}, {4.8, 0.2},
        {4.8, 0.1}, {4.3, 0.1}, {5.8, 0.2}, {5.7, 0.4}, {5.4, 0.4}, {5.1, 0.3},
        {5.7, 0.3}, {5.1, 0.3}, {5.4, 0.2}, {5.1, 0.4}, {4.6, 0.2}, {5.1, 0.5},
        {4.8, 0.2}, {5.0, 0.2}, {5.0, 0.4}, {5.2, 0.2}, {5.2, 0.2}, {4.7, 0.2},
        {4.8, 0.2}, {5.4, 0.4}, {5.2, 0.1}, {5.5, 0.2}, {4.9, 0.2}, {5.0, 0.2},
        {5.5, 0.2}, {4.9, 0.1}, {4.4, 0.2}, {5.1, 0.2}, {5.0, 0.3}, {4.5, 0.3},
        {4.4, 0.2}, {5.0, 0.6}, {5.1, 0.4}, {4.8, 0.3}, {5.1, 0.2}, {4.6, 0.2},
        {5.3, 0.2}, {5.0, 0.2}, {7.0, 1.4}, {6.4, 1.5}, {6.9, 1.5}, {5.5, 1.3},
        {6.5, 1.5}, {5.7, 1.3}, {6.3, 1.6}, {4.9, 1.0}, {6.6, 1.3}, {5.2, 1.4},
        {5.0, 1.0}, {5.9, 1.5}, {6.0, 1.0}, {6.1, 1.4}, {5.6, 1.3}, {6.7, 1.4},
        {5.6, 1.5}, {5.8, 1.0}, {6.2, 1.5}, {5.6, 1.1}, {5.9, 1.8}, {6.1, 1.3},
        {6.3, 1.5}, {6.1, 1.2}, {6.4, 1.3}, {6.6, 1.4}, {6.8, 1.4}, {6.7, 1.7},
        {6.0, 1.5}, {5.7, 1.0}, {5.5, 1.1}, {5.5, 1.0}, {5.8, 1.2}, {6.0, 1.6},
        {5.4, 1.5}, {6.0, 1.6}, {6.7, 1.5}, {6.3, 1.3}, {5.6, 1.3}, {5.5, 1.3},
        {5.5, 1.2}, {6.1, 1.4}, {5.8, 1.2}, {5.0, 1.0}, {5.6, 1.3}, {5.7, 1.2},
        {5.7, 1.3}, {6.2, 1.3}, {5.1, 1.1}, {5.7, 1.3}, {6.3, 2.5}, {5.8, 1.9},
        {7.1, 2.1}, {6.3, 1.8}, {6.5, 2.2}, {7.6, 2.1}, {4.9, 1.7}, {7.3, 1.8},
        {6.7, 1.8}, {7.2, 2.5}, {6.5, 2.0}, {6.4, 1.9}, {6.8, 2.1}, {5.7, 2.0},
        {5.8, 2.4}, {6.4, 2.3}, {6.5, 1.8}, {7.7, 2.2}, {7.7, 2.3}, {6.0, 1.5},
        {6.9, 2.3}, {5.6, 2.0}, {7.7, 2.0}, {6.3, 1.8}, {6.7, 2.1}, {7.2, 1.8},
        {6.2, 1.8}, {6.1, 1.8}, {6.4, 2.1}, {7.2, 1.6}, {7.4, 1.9}, {7.9, 2.0},
        {6.4, 2.2}, {6.3, 1.5}, {6.1, 1.4}, {7.7, 2.3}, {6.3, 2.4}, {6.4, 1.8},
        {6.0, 1.8}, {6.9, 2.1}, {6.7, 2.4}, {6.9, 2.3}, {5.8, 1.9}, {6.8, 2.3},
        {6.7, 2.5}, {6.7, 2.3}, {6.3, 1.9}, {6.5, 2.0}, {6.2, 2.3}, {5.9, 1.8},
    };
    return data;
}

} // namespace shs::apps
