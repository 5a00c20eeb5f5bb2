"""Session service: endpoints, persistence, and preview/commit coherence."""

import pytest
from fastapi.testclient import TestClient

from signalfield import engine, register
from signalfield.engine import BIWEEKLY, Tier
from signalfield.harness import reference
from signalfield.service import create_app


@pytest.fixture()
def store(tmp_path):
    reg = register.replay(reference.bundled_log_entries(), BIWEEKLY, Tier.LITE)
    path = tmp_path / "register.json"
    register.save_register(reg, path)
    return path


@pytest.fixture()
def client(store):
    return TestClient(create_app(store))


SESSION_27 = {"day": 300, "assessments": [[1, 1], [1, 2]], "occurrences": 1}


class TestReads:
    def test_config_reports_cadence_tier_and_constants(self, client):
        config = client.get("/config").json()
        assert config["cadence"] == "biweekly"
        assert config["tier"] == "lite"
        assert config["constants"]["sms_threshold"] == 7.07
        assert config["constants"]["y_floor"] == 0.50

    def test_list_signals_summarizes_latest_state(self, client):
        (summary,) = client.get("/signals").json()
        assert summary["name"] == "gas-fumes"
        assert summary["sessions"] == 26
        assert summary["status"] == "active"
        assert summary["region"] == "QM"

    def test_get_signal_uses_register_document_fields(self, client, store):
        doc = client.get("/signals/s0001").json()
        stored = register.register_to_doc(register.load_register(store))["signals"][0]
        assert doc == stored

    def test_locus_and_ssi_series(self, client):
        locus = client.get("/signals/s0001/locus").json()
        series = client.get("/signals/s0001/ssi").json()
        assert len(locus) == len(series) == 26
        assert [p["sms"] for p in series] == [p["sms"] for p in locus]
        peak = max(series, key=lambda p: p["ssi"])
        assert peak["session_index"] == 15

    def test_unknown_signal_is_404(self, client):
        response = client.get("/signals/s9999")
        assert response.status_code == 404
        assert response.json()["detail"]["code"] == "unknown-signal"


class TestPreview:
    def test_preview_matches_later_commit_field_for_field(self, client):
        preview = client.post("/signals/s0001/preview", json=SESSION_27)
        commit = client.post("/signals/s0001/sessions", json=SESSION_27)
        assert preview.status_code == 200 and commit.status_code == 201
        assert preview.json() == commit.json()

    def test_preview_persists_nothing(self, client, store):
        before = store.read_text()
        client.post("/signals/s0001/preview", json=SESSION_27)
        assert store.read_text() == before
        assert client.get("/signals").json()[0]["sessions"] == 26

    def test_preview_is_repeatable(self, client):
        first = client.post("/signals/s0001/preview", json=SESSION_27)
        second = client.post("/signals/s0001/preview", json=SESSION_27)
        assert first.json() == second.json()

    def test_preview_validates_day_order(self, client):
        response = client.post(
            "/signals/s0001/preview", json={"day": 100, "assessments": [[1, 1]]}
        )
        assert response.status_code == 422
        assert response.json()["detail"]["code"] == "invalid-session"


class TestCommit:
    def test_commit_saves_before_responding(self, client, store):
        client.post("/signals/s0001/sessions", json=SESSION_27)
        reloaded = register.load_register(store)
        assert len(reloaded.signals["s0001"].locus) == 27

    def test_review_only_commit(self, client):
        response = client.post(
            "/signals/s0001/sessions", json={"day": 300, "note": "holiday"}
        )
        assert response.status_code == 201
        doc = response.json()
        assert doc["n"] == 0
        assert doc["w_eff"] is None

    def test_stale_day_is_rejected(self, client):
        response = client.post(
            "/signals/s0001/sessions", json={"day": 252, "assessments": [[1, 1]]}
        )
        assert response.status_code == 422

    def test_client_token_applies_commit_once(self, client):
        payload = dict(SESSION_27, client_token="retry-1")
        first = client.post("/signals/s0001/sessions", json=payload)
        second = client.post("/signals/s0001/sessions", json=payload)
        assert first.json() == second.json()
        assert client.get("/signals").json()[0]["sessions"] == 27

    def test_bad_scores_rejected(self, client):
        response = client.post(
            "/signals/s0001/sessions", json={"day": 300, "assessments": [[9, 0]]}
        )
        assert response.status_code == 422


class TestCreate:
    def test_create_and_persist(self, client, store):
        response = client.post(
            "/signals",
            json={"name": "dock-lighting", "day": 260, "assessments": [[1, 0]]},
        )
        assert response.status_code == 201
        doc = response.json()
        assert doc["id"] == "s0002"
        assert doc["locus"][0]["x"] == 2.5
        assert "s0002" in register.load_register(store).signals

    def test_duplicate_name_conflicts(self, client):
        response = client.post(
            "/signals", json={"name": "gas-fumes", "day": 260, "assessments": [[1, 1]]}
        )
        assert response.status_code == 409

    def test_entry_gate_applies(self, client):
        response = client.post(
            "/signals", json={"name": "too-hot", "day": 260, "assessments": [[3, 0]]}
        )
        assert response.status_code == 422
        assert response.json()["detail"]["code"] == "entry-constraint"


class TestStatusRoutes:
    def test_candidate_retire_flow(self, client, store):
        assert client.post("/signals/s0001/candidate").status_code == 200
        # latest d is 4.21, outside the retirement radius
        refused = client.post("/signals/s0001/retire", json={"confirmed": True})
        assert refused.status_code == 409
        assert client.post("/signals/s0001/reactivate").status_code == 200
        assert register.load_register(store).signals["s0001"].status.value == "active"

    def test_retire_inside_radius(self, client, store):
        client.post(
            "/signals", json={"name": "fading", "day": 260, "assessments": [[0, 0]]}
        )
        client.post("/signals/s0002/candidate")
        response = client.post("/signals/s0002/retire", json={"confirmed": True})
        assert response.status_code == 200
        assert response.json()["status"] == "retired"
        retired = register.load_register(store).signals["s0002"]
        assert retired.status.value == "retired"

    def test_retire_needs_confirmation(self, client):
        client.post(
            "/signals", json={"name": "fading", "day": 260, "assessments": [[0, 0]]}
        )
        client.post("/signals/s0002/candidate")
        response = client.post("/signals/s0002/retire", json={"confirmed": False})
        assert response.status_code == 409

    def test_candidate_requires_active(self, client):
        client.post("/signals/s0001/candidate")
        again = client.post("/signals/s0001/candidate")
        assert again.status_code == 409


def test_worked_session_preview_values(tmp_path):
    # preview the sixth reference session against the fifth state and
    # check the published position, SMS flag, and SSI come back
    entries = reference.bundled_log_entries()[:5]
    reg = register.replay(entries, BIWEEKLY, Tier.LITE)
    path = tmp_path / "register.json"
    register.save_register(reg, path)
    client = TestClient(create_app(path))
    preview = client.post(
        "/signals/s0001/preview",
        json={"day": 63, "assessments": [[4, 1], [4, 1], [4, 1]], "occurrences": 3},
    ).json()
    assert preview["x"] == pytest.approx(6.77, abs=0.01)
    assert preview["y"] == pytest.approx(2.86, abs=0.01)
    assert preview["sms"] is True
    assert preview["ssi"] == pytest.approx(1.33, abs=0.01)
    assert engine.sms_active(preview["d"])


def test_cross_origin_headers(gasfumes_register, tmp_path):
    # the facilitation page is served from a different origin than the
    # service, so responses must carry CORS headers
    path = tmp_path / "register.json"
    register.save_register(gasfumes_register, path)
    client = TestClient(create_app(path))
    response = client.get("/config", headers={"Origin": "http://localhost:5173"})
    assert response.headers["access-control-allow-origin"] == "*"
