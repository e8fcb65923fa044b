# coding: utf-8
# Copyright (C) 2026, sctype developers.
# Licensed to the Apache Software Foundation (ASF) under one
# or more contributor license agreements.  See the NOTICE file
# distributed with this work for additional information
# regarding copyright ownership.  The ASF licenses this file
# to you under the Apache License, Version 2.0 (the
# "License"); you may not use this file except in compliance
# with the License.  You may obtain a copy of the License at
#
#   http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing,
# software distributed under the License is distributed on an
# "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
# KIND, either express or implied.  See the License for the
# specific language governing permissions and limitations
# under the License.

from .__version__ import __version__
from .complex import (
    Complex,
    Pair,
    closure,
    star,
    link,
    boundary,
    free_simplices,
    free_vertices,
    has_empty_interior,
    barycentric_subdivision,
    euler_characteristic,
    relabel,
)
from .link_graph import (
    MarkedLink,
    extract_marked_link,
    bridges,
    augment_with_apex,
    edge_passes,
    make_positive_certificate,
    make_negative_certificate,
    check_certificate,
)
from .decision import (
    Verdict,
    Decomposition,
    cone_surjection_property,
    computable_type,
    cone_pair_mode,
    union_check,
    plus_boundary_pair,
)
from .gallery import generate, self_check
from .io import parse, serialize, Report
