// SPDX-License-Identifier: Apache-2.0
//
// Copyright (C) 2026 The risq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef RISQ_GEOMETRY_HPP
#define RISQ_GEOMETRY_HPP

#include "risq/common.hpp"

#include <cstddef>
#include <vector>

namespace risq
{
    // Distances below this value are rejected; the path-loss models diverge in the near field.
    inline constexpr double kNearFieldGuard = 1.0; // [m]

    // Default ratio between the shorter panel-center link distance and the panel extent above which
    // the second-order far-field expansion and constant-gain approximation are accepted.
    inline constexpr double kDefaultFarFieldRatio = 10.0;

    // Placement of BS, user and an M x N reflecting panel.
    //
    // The panel lies in the plane spanned by
    //   n_h = (cos(rotation), sin(rotation), 0)   (columns, spacing d_h)
    //   n_v = (0, 0, 1)                           (rows, spacing d_v)
    // and element (m, n) sits at ris_center + (n - (N-1)/2) d_h n_h + (m - (M-1)/2) d_v n_v, so that
    // ris_center is the centroid of the panel.
    class LinkGeometry
    {
    public:
        LinkGeometry(const Vec3 &bs_position, const Vec3 &user_position, const Vec3 &ris_center,
                     double ris_rotation, std::size_t rows, std::size_t cols,
                     double spacing_h, double spacing_v);

        const Vec3 &bs_position() const { return bs_; }
        const Vec3 &user_position() const { return user_; }
        const Vec3 &ris_center() const { return center_; }
        double ris_rotation() const { return rotation_; } // [rad]
        std::size_t rows() const { return rows_; }        // M
        std::size_t cols() const { return cols_; }        // N
        std::size_t element_count() const { return rows_ * cols_; }
        double spacing_h() const { return spacing_h_; } // [m]
        double spacing_v() const { return spacing_v_; } // [m]

        Vec3 horizontal_axis() const; // n_h
        Vec3 vertical_axis() const;   // n_v

        // Offset of element (m, n) from the panel center
        Vec3 element_offset(std::size_t m, std::size_t n) const;

        // Largest panel side, max(N d_h, M d_v) [m]
        double panel_extent() const;

        // Same link with a different panel size
        LinkGeometry with_panel(std::size_t rows, std::size_t cols) const;

        // All three positions shifted by the same vector
        LinkGeometry translated(const Vec3 &shift) const;

        // BS and user exchanged
        LinkGeometry swapped_endpoints() const;

    private:
        Vec3 bs_;
        Vec3 user_;
        Vec3 center_;
        double rotation_;
        std::size_t rows_;
        std::size_t cols_;
        double spacing_h_;
        double spacing_v_;
    };

    // Per-element distances, each [M, N]
    struct DistanceField
    {
        RealMatrix bs_leg;   // D: BS -> element
        RealMatrix user_leg; // d: element -> user
        RealMatrix total;    // L = D + d
    };

    // Element positions in row-major order (flat index m*N + n)
    std::vector<Vec3> element_positions(const LinkGeometry &geom);

    // Euclidean distances; throws PreconditionError if any distance is below kNearFieldGuard
    DistanceField exact_distances(const LinkGeometry &geom);

    // Distances from the panel center to BS and user
    double center_bs_distance(const LinkGeometry &geom);
    double center_user_distance(const LinkGeometry &geom);

    // min(center distances) / panel extent
    double farfield_ratio(const LinkGeometry &geom);

    // Throws PreconditionError naming the offending ratio when farfield_ratio(geom) < min_ratio
    void require_far_field(const LinkGeometry &geom, double min_ratio = kDefaultFarFieldRatio);

    // Second-order expansion around the panel center. With r the center distance and u the unit vector
    // from the endpoint to the center, the distance to an element at offset o is
    //   r + u.o + (|o|^2 - (u.o)^2) / (2 r)
    // which for a BS on the y axis at panel height reduces to
    //   (m d_h sin(theta_R) + D00) + ((m d_h cos(theta_R))^2 + (n d_v)^2) / (2 D00).
    DistanceField farfield_distances(const LinkGeometry &geom, double min_ratio = kDefaultFarFieldRatio);

    // Scenario-level placement: horizontal (or slant) link distances plus heights.
    //
    // The BS is at (0, 0, bs_height), the panel center at (0, D0, ris_height) and the user at horizontal
    // distance d0 from the panel center along bearing user_bearing (measured from +x in the x-y plane).
    struct LayoutSpec
    {
        double bs_ris_distance = 95.0;   // D0 [m]
        double ris_user_distance = 65.0; // d0 [m]
        double bs_height = 25.0;         // [m]
        double ris_height = 10.0;        // [m]
        double user_height = 1.5;        // [m]
        bool distances_are_3d = false;   // D0, d0 given as slant instead of horizontal distances
        double ris_rotation = 0.0;       // theta_R [rad]
        double user_bearing = -std::numbers::pi / 4.0; // [rad]
        std::size_t rows = 1;
        std::size_t cols = 1;
        double spacing_h = 0.03; // [m]
        double spacing_v = 0.03; // [m]
    };

    LinkGeometry make_geometry(const LayoutSpec &layout);

} // namespace risq

#endif
