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

import os
import logging
from enum import IntEnum

from .__version__ import __version__

logger = logging.getLogger(__name__)

# 报告格式的版本号，跟随主版本号变化
REPORT_SCHEMA_VERSION = '.'.join(__version__.split('.', maxsplit=2)[:2])

# 内置样例的 URI 前缀，如 `gallery:dunce_hat`、`gallery:star(3)`
GALLERY_SCHEME = 'gallery:'
STDIN_SOURCE = '-'

# 锥顶点 ω 使用的保留标签，输入的顶点编号均为非负整数，不会与之冲突
APEX = -1

# 超过此数目的单纯形的复形会被拒绝
MAX_SIMPLICES = int(os.environ.get('SCTYPE_MAX_SIMPLICES', 10 ** 6))
# `--parallel` 时默认使用的线程数；None 表示由 ThreadPoolExecutor 自行决定
DEFAULT_WORKERS = (
    int(os.environ['SCTYPE_WORKERS']) if os.environ.get('SCTYPE_WORKERS') else None
)


class ExitCode(IntEnum):
    COMPUTABLE = 0
    NOT_COMPUTABLE = 1
    INAPPLICABLE = 2
    INPUT_ERROR = 3


class Flags(object):
    FREE_VERTEX_OUTSIDE_A = 'FreeVertexOutsideA'
    ISOLATED_LINK_EXCEPTION = 'IsolatedLinkException'
    DERIVED_TIP_RULE = 'DerivedTipRule'
    BALL_SPHERE_PAIR = 'BallSpherePair'


BOUNDARY_KINDS = ('one', 'plus', 'odd')
