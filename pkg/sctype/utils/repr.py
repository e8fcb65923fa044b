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
# Credits: adapted from https://github.com/mindee/doctr

from typing import Iterable, List

__all__ = ['NestedObject', 'brief']

# longer collections are elided in reprs
MAX_REPR_ITEMS = 6


def _addindent(s_, num_spaces):
    s = s_.split('\n')
    if len(s) == 1:
        return s_
    first = s.pop(0)
    s = [(num_spaces * ' ') + line for line in s]
    return first + '\n' + '\n'.join(s)


def brief(items: Iterable, max_items: int = MAX_REPR_ITEMS) -> str:
    """Compact rendering of a (sorted) collection, e.g. `[(0,), (1,), ... +12]`."""
    items = list(items)
    shown = ', '.join(repr(it) for it in items[:max_items])
    if len(items) > max_items:
        shown += f', ... +{len(items) - max_items}'
    return f'[{shown}]'


class NestedObject:
    """Mixin giving nested, indented reprs.

    Subclasses override `extra_repr()` for one-line info and list the
    attributes rendered as sub-objects in `_children_names`.
    """

    _children_names: List[str] = []

    def extra_repr(self) -> str:
        return ''

    def __repr__(self):
        extra_lines = []
        extra_repr = self.extra_repr()
        if extra_repr:
            extra_lines = extra_repr.split('\n')
        child_lines = []
        for key in self._children_names:
            child = getattr(self, key)
            if isinstance(child, (list, tuple)) and len(child) > 0:
                shown = [repr(subchild) for subchild in child[:MAX_REPR_ITEMS]]
                if len(child) > MAX_REPR_ITEMS:
                    shown.append(f'... +{len(child) - MAX_REPR_ITEMS}')
                child_str = ",\n".join(shown)
                if len(shown) > 1:
                    child_str = _addindent(f"\n{child_str},", 2) + '\n'
                child_str = f"[{child_str}]"
            else:
                child_str = repr(child)
            child_lines.append('(' + key + '): ' + _addindent(child_str, 2))
        lines = extra_lines + child_lines

        main_str = self.__class__.__name__ + '('
        if lines:
            if len(extra_lines) == 1 and not child_lines:
                main_str += extra_lines[0]
            else:
                main_str += '\n  ' + '\n  '.join(lines) + '\n'
        return main_str + ')'
