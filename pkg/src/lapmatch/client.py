"""Thin HTTP client used by the CLI.

Without a ``--url`` the service app is mounted in-process through an ASGI
transport, so no server has to be running; with a URL the same requests go
over the network to a deployed instance.
"""

from __future__ import annotations

import asyncio

import httpx


class ServiceClient:
    def __init__(self, url: str | None = None, timeout: float = 600.0):
        self.url = url
        self.timeout = timeout

    def post(self, path: str, payload: dict) -> tuple[int, dict]:
        """POST a JSON payload; returns (status code, decoded body)."""
        if self.url is not None:
            with httpx.Client(base_url=self.url, timeout=self.timeout) as client:
                response = client.post(path, json=payload)
                return response.status_code, response.json()
        return asyncio.run(self._post_in_process(path, payload))

    async def _post_in_process(self, path: str, payload: dict) -> tuple[int, dict]:
        from .service import app

        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(
            transport=transport, base_url="http://lapmatch.local", timeout=self.timeout
        ) as client:
            response = await client.post(path, json=payload)
            return response.status_code, response.json()
