import pytest
from fastapi.testclient import TestClient

from skillmap.service import create_app


@pytest.fixture(scope="module")
def client(app_state):
    return TestClient(create_app(app_state))


class TestAnalyze:
    def test_json_body(self, client, skills):
        text = f"Our onboarding week praises {skills[0].label} whenever possible."
        resp = client.post("/api/analyze", json={"name": "memo", "text": text})
        assert resp.status_code == 200
        body = resp.json()
        assert body["document_name"] == "memo"
        assert body["chunk_count"] >= 1
        assert {s["skill_id"] for s in body["skills"]} >= {skills[0].id}
        assert len(body["sdgs"]) == 17
        assert "timings" in body

    def test_file_upload_txt(self, client, sample_policy_bytes):
        resp = client.post(
            "/api/analyze",
            files={"file": ("policy.txt", sample_policy_bytes, "text/plain")},
        )
        assert resp.status_code == 200
        assert resp.json()["document_name"] == "policy.txt"
        assert resp.json()["skills"]

    def test_file_upload_html(self, client, skills):
        html = f"<html><body><p>{skills[1].label} matters here.</p></body></html>"
        resp = client.post(
            "/api/analyze",
            files={"file": ("page.html", html.encode(), "text/html")},
        )
        assert resp.status_code == 200
        assert skills[1].id in {s["skill_id"] for s in resp.json()["skills"]}

    def test_empty_document(self, client):
        resp = client.post("/api/analyze", json={"text": "   "})
        assert resp.status_code == 422
        assert resp.json()["code"] == "empty_document"

    def test_unsupported_format(self, client):
        resp = client.post("/api/analyze", json={"text": "x", "format": "pdf"})
        assert resp.status_code == 400
        assert resp.json()["code"] == "invalid_document"

    def test_format_mismatch(self, client):
        resp = client.post("/api/analyze", json={"text": "plain words", "format": "html"})
        assert resp.status_code == 400

    def test_missing_text_field(self, client):
        resp = client.post("/api/analyze", json={"name": "x"})
        assert resp.status_code == 400
        assert resp.json()["code"] == "bad_request"

    def test_oversize(self, client, app_state):
        blob = b"x" * (app_state.prep.max_size_bytes + 1)
        resp = client.post("/api/analyze", json={"text": blob.decode()})
        assert resp.status_code == 413

    def test_malformed_xml(self, client):
        resp = client.post(
            "/api/analyze",
            files={"file": ("d.xml", b"<r><a>x</r>", "application/xml")},
        )
        assert resp.status_code == 400


class TestSdgDetail:
    def test_known_goal(self, client, sdgs):
        resp = client.get("/api/sdg/3")
        assert resp.status_code == 200
        body = resp.json()
        assert body["id"] == 3
        assert body["name"] == next(s.name for s in sdgs if s.sdg_id == 3)
        assert body["description"]

    @pytest.mark.parametrize("bad_id", [0, 18, 99])
    def test_unknown_goal(self, client, bad_id):
        resp = client.get(f"/api/sdg/{bad_id}")
        assert resp.status_code == 404


class TestHealthAndConfig:
    def test_health(self, client, skills, occupations, courses):
        resp = client.get("/api/health")
        assert resp.status_code == 200
        body = resp.json()
        assert body["status"] == "ok"
        assert body["catalog_sizes"] == {
            "skills": len(skills),
            "occupations": len(occupations),
            "courses": len(courses),
            "sdgs": 17,
        }
        assert body["embedder_dim"] == 256

    def test_config_echo(self, client, app_state):
        body = client.get("/api/config").json()
        assert body["extraction"]["tau"] == app_state.extraction.tau
        assert body["mapping"]["tau_c"] == app_state.mapping.tau_c
        assert body["embedder"]["dim"] == app_state.embedder.dim

    def test_not_loaded_returns_503(self):
        bare = TestClient(create_app(None))
        for path in ("/api/health", "/api/config", "/api/sdg/1"):
            assert bare.get(path).status_code == 503
        assert bare.post("/api/analyze", json={"text": "x"}).status_code == 503


class TestDeterminism:
    def test_same_payload_same_result(self, client, skills):
        text = f"Teams practice {skills[2].label} daily."
        a = client.post("/api/analyze", json={"text": text}).json()
        b = client.post("/api/analyze", json={"text": text}).json()
        a.pop("timings")
        b.pop("timings")
        assert a == b
