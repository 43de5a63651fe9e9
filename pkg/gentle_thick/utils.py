#!/usr/bin/env python
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
# WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
# License for the specific language governing permissions and limitations
# under the License.

# functions that don't fit in well elsewhere

import codecs
import io
import locale

import six


def wrap_stream(stream, encoding='utf-8'):

    try:
        stream_enc = stream.encoding
    except AttributeError:
        stream_enc = locale.getpreferredencoding()

    if hasattr(stream, 'buffer'):
        stream = stream.buffer

    if str(stream_enc).lower() == str(encoding).lower():
        return stream

    return codecs.EncodedFile(stream, encoding, stream_enc)


def read_source(source):
    """Return ``(text, name)`` for a path or an open file object."""
    if hasattr(source, 'read'):
        data = source.read()
        name = getattr(source, 'name', '<stream>')
    else:
        with io.open(source, 'r', encoding='utf-8') as fp:
            data = fp.read()
        name = source
    if isinstance(data, six.binary_type):
        data = data.decode('utf-8')
    return data, name


def write_text(stream, text):
    """Write unicode text to a byte or text stream, newline terminated."""
    if not text.endswith('\n'):
        text += '\n'
    try:
        stream.write(text.encode('utf-8'))
    except TypeError:
        stream.write(text)
