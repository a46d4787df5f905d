// Thin typed client over the arm service JSON API.

import type { ConfigDocument, StateDocument, TargetResponse, Vec3 } from "./model.js";

export class ApiError extends Error {
  constructor(message: string, readonly status?: number) {
    super(message);
  }
}

export class ApiClient {
  constructor(readonly base: string, private readonly fetchImpl: typeof fetch = fetch) {}

  private url(path: string): string {
    return this.base.replace(/\/$/, "") + path;
  }

  async getState(): Promise<StateDocument> {
    return this.getJson<StateDocument>("/api/state");
  }

  async getConfig(): Promise<ConfigDocument> {
    return this.getJson<ConfigDocument>("/api/config");
  }

  private async getJson<T>(path: string): Promise<T> {
    const response = await this.fetchImpl(this.url(path));
    if (!response.ok) {
      throw new ApiError(`GET ${path} failed with ${response.status}`, response.status);
    }
    return (await response.json()) as T;
  }

  /**
   * Submit a Cartesian target. Rejections (422) resolve to the parsed
   * response body; transport and server errors throw.
   */
  async postTarget(target: Vec3): Promise<TargetResponse> {
    const response = await this.fetchImpl(this.url("/api/target"), {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(target),
    });
    if (response.ok || response.status === 422) {
      return (await response.json()) as TargetResponse;
    }
    throw new ApiError(`POST /api/target failed with ${response.status}`, response.status);
  }

  async estop(): Promise<void> {
    const response = await this.fetchImpl(this.url("/api/estop"), { method: "POST" });
    if (!response.ok) {
      throw new ApiError(`POST /api/estop failed with ${response.status}`, response.status);
    }
    await response.json();
  }
}
