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

#include "risq/geometry.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>

namespace risq
{
    LinkGeometry::LinkGeometry(const Vec3 &bs_position, const Vec3 &user_position, const Vec3 &ris_center,
                               double ris_rotation, std::size_t rows, std::size_t cols,
                               double spacing_h, double spacing_v)
        : bs_(bs_position), user_(user_position), center_(ris_center), rotation_(ris_rotation),
          rows_(rows), cols_(cols), spacing_h_(spacing_h), spacing_v_(spacing_v)
    {
        if (rows_ < 1 || cols_ < 1)
            throw InvalidArgument(fmt::format("LinkGeometry: panel must have at least one row and column (got {} x {})", rows_, cols_));
        if (!(spacing_h_ > 0.0) || !(spacing_v_ > 0.0))
            throw InvalidArgument(fmt::format("LinkGeometry: element spacing must be positive (d_h = {}, d_v = {})", spacing_h_, spacing_v_));
        if (!bs_.allFinite() || !user_.allFinite() || !center_.allFinite() || !std::isfinite(rotation_))
            throw InvalidArgument("LinkGeometry: positions and rotation must be finite");
        if (bs_ == center_)
            throw InvalidArgument("LinkGeometry: BS position coincides with the panel center");
        if (user_ == center_)
            throw InvalidArgument("LinkGeometry: user position coincides with the panel center");
    }

    Vec3 LinkGeometry::horizontal_axis() const
    {
        return {std::cos(rotation_), std::sin(rotation_), 0.0};
    }

    Vec3 LinkGeometry::vertical_axis() const
    {
        return Vec3::UnitZ();
    }

    Vec3 LinkGeometry::element_offset(std::size_t m, std::size_t n) const
    {
        const double col_offset = (double(n) - 0.5 * double(cols_ - 1)) * spacing_h_;
        const double row_offset = (double(m) - 0.5 * double(rows_ - 1)) * spacing_v_;
        return col_offset * horizontal_axis() + row_offset * vertical_axis();
    }

    double LinkGeometry::panel_extent() const
    {
        return std::max(double(cols_) * spacing_h_, double(rows_) * spacing_v_);
    }

    LinkGeometry LinkGeometry::with_panel(std::size_t rows, std::size_t cols) const
    {
        return {bs_, user_, center_, rotation_, rows, cols, spacing_h_, spacing_v_};
    }

    LinkGeometry LinkGeometry::translated(const Vec3 &shift) const
    {
        return {bs_ + shift, user_ + shift, center_ + shift, rotation_, rows_, cols_, spacing_h_, spacing_v_};
    }

    LinkGeometry LinkGeometry::swapped_endpoints() const
    {
        return {user_, bs_, center_, rotation_, rows_, cols_, spacing_h_, spacing_v_};
    }

    std::vector<Vec3> element_positions(const LinkGeometry &geom)
    {
        std::vector<Vec3> out;
        out.reserve(geom.element_count());
        for (std::size_t m = 0; m < geom.rows(); ++m)
            for (std::size_t n = 0; n < geom.cols(); ++n)
                out.push_back(geom.ris_center() + geom.element_offset(m, n));
        return out;
    }

    DistanceField exact_distances(const LinkGeometry &geom)
    {
        const auto M = Eigen::Index(geom.rows());
        const auto N = Eigen::Index(geom.cols());
        DistanceField field{RealMatrix(M, N), RealMatrix(M, N), RealMatrix(M, N)};

        for (Eigen::Index m = 0; m < M; ++m)
            for (Eigen::Index n = 0; n < N; ++n)
            {
                const Vec3 c = geom.ris_center() + geom.element_offset(std::size_t(m), std::size_t(n));
                const double D = (c - geom.bs_position()).norm();
                const double d = (c - geom.user_position()).norm();
                if (D < kNearFieldGuard || d < kNearFieldGuard)
                    throw PreconditionError(fmt::format(
                        "exact_distances: element ({}, {}) is within the {} m near-field guard (D = {} m, d = {} m)",
                        m, n, kNearFieldGuard, D, d));
                field.bs_leg(m, n) = D;
                field.user_leg(m, n) = d;
                field.total(m, n) = D + d;
            }
        return field;
    }

    double center_bs_distance(const LinkGeometry &geom)
    {
        return (geom.ris_center() - geom.bs_position()).norm();
    }

    double center_user_distance(const LinkGeometry &geom)
    {
        return (geom.ris_center() - geom.user_position()).norm();
    }

    double farfield_ratio(const LinkGeometry &geom)
    {
        return std::min(center_bs_distance(geom), center_user_distance(geom)) / geom.panel_extent();
    }

    void require_far_field(const LinkGeometry &geom, double min_ratio)
    {
        const double ratio_bs = center_bs_distance(geom) / geom.panel_extent();
        const double ratio_user = center_user_distance(geom) / geom.panel_extent();
        if (ratio_bs < min_ratio)
            throw PreconditionError(fmt::format(
                "far-field regime violated: BS distance / panel extent = {:.4g} < {:.4g}", ratio_bs, min_ratio));
        if (ratio_user < min_ratio)
            throw PreconditionError(fmt::format(
                "far-field regime violated: user distance / panel extent = {:.4g} < {:.4g}", ratio_user, min_ratio));
    }

    namespace
    {
        // Second-order expansion of |center + offset - endpoint|
        double expand(const Vec3 &center_from_endpoint, double r, const Vec3 &offset)
        {
            const double along = center_from_endpoint.dot(offset) / r;
            return r + along + (offset.squaredNorm() - along * along) / (2.0 * r);
        }
    } // namespace

    DistanceField farfield_distances(const LinkGeometry &geom, double min_ratio)
    {
        require_far_field(geom, min_ratio);

        const Vec3 to_center_bs = geom.ris_center() - geom.bs_position();
        const Vec3 to_center_user = geom.ris_center() - geom.user_position();
        const double r_bs = to_center_bs.norm();
        const double r_user = to_center_user.norm();

        const auto M = Eigen::Index(geom.rows());
        const auto N = Eigen::Index(geom.cols());
        DistanceField field{RealMatrix(M, N), RealMatrix(M, N), RealMatrix(M, N)};
        for (Eigen::Index m = 0; m < M; ++m)
            for (Eigen::Index n = 0; n < N; ++n)
            {
                const Vec3 o = geom.element_offset(std::size_t(m), std::size_t(n));
                field.bs_leg(m, n) = expand(to_center_bs, r_bs, o);
                field.user_leg(m, n) = expand(to_center_user, r_user, o);
                field.total(m, n) = field.bs_leg(m, n) + field.user_leg(m, n);
            }
        return field;
    }

    LinkGeometry make_geometry(const LayoutSpec &layout)
    {
        auto horizontal = [&](double distance, double dh, const char *name)
        {
            if (!(distance > 0.0))
                throw InvalidArgument(fmt::format("layout: {} must be positive (got {})", name, distance));
            if (!layout.distances_are_3d)
                return distance;
            if (distance <= std::abs(dh))
                throw InvalidArgument(fmt::format(
                    "layout: slant {} = {} m does not exceed the height difference {} m", name, distance, std::abs(dh)));
            return std::sqrt(distance * distance - dh * dh);
        };

        const double D0 = horizontal(layout.bs_ris_distance, layout.ris_height - layout.bs_height, "BS-RIS distance");
        const double d0 = horizontal(layout.ris_user_distance, layout.ris_height - layout.user_height, "RIS-user distance");

        const Vec3 bs{0.0, 0.0, layout.bs_height};
        const Vec3 center{0.0, D0, layout.ris_height};
        const Vec3 user{d0 * std::cos(layout.user_bearing), D0 + d0 * std::sin(layout.user_bearing), layout.user_height};
        return {bs, user, center, layout.ris_rotation, layout.rows, layout.cols, layout.spacing_h, layout.spacing_v};
    }

} // namespace risq
